#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace symqm {

/// One letter of F(a,b). `gen` is 0 for a, 1 for b; `exp` is +1 or -1.
struct Letter {
  std::uint8_t gen = 0;
  std::int8_t exp = +1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word in the free group F(a,b).
///
/// Internally a word is a flat array of signed codes (+1 = a, -1 = a^-1,
/// +2 = b, -2 = b^-1); the reduced invariant (no adjacent inverse pairs) is
/// maintained by every constructor and operation. The empty word is the
/// identity.
class Word {
public:
  using code_t = std::int8_t;

  Word() = default;

  /// Reduce an arbitrary letter sequence. Idempotent.
  static Word reduce(std::span<const Letter> letters);
  static Word reduce_codes(std::span<const code_t> codes);

  /// Parse a string over {a, A, b, B} (capital = inverse), e.g. "abAB".
  /// Throws std::invalid_argument on any other character.
  static Word parse(const std::string& text);

  static Word commutator_ab();  // [a,b] = abAB

  bool empty() const { return codes_.empty(); }
  std::size_t size() const { return codes_.size(); }
  code_t code_at(std::size_t i) const { return codes_[i]; }
  std::span<const code_t> codes() const { return codes_; }
  Letter letter_at(std::size_t i) const;

  /// Reduced product of two reduced words.
  friend Word concat(const Word& u, const Word& v);
  Word inverse() const;

  /// n-th power (n may be negative) by repeated squaring on reduced words.
  Word pow(long long n) const;

  /// Splits w = conjugator * core * conjugator^-1 with core cyclically
  /// reduced (first and last letters not inverse to each other).
  struct CyclicForm {
    Word core;
    Word conjugator;
  };
  CyclicForm cyclic_reduce() const;

  bool cyclically_reduced() const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<code_t> codes_;
  void push_reduced(code_t c);
};

/// Exponent sum of a single generator (code +1 or +2); the abelianization.
long long exponent_sum(const Word& g, Word::code_t gen_code);

/// Number of (possibly overlapping) occurrences of `pattern` as a contiguous
/// subword of `g`. In cyclic mode, `g` is read as a cyclic word and each
/// starting position within one period counts once; `g` must be cyclically
/// reduced in that case. The scan is KMP-based.
long long count_subwords(const Word& pattern, const Word& g, bool cyclic);

}  // namespace symqm
