#include "symqm/word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace symqm {

namespace {

Word::code_t letter_code(const Letter& l) {
  return static_cast<Word::code_t>((l.gen == 0 ? 1 : 2) * (l.exp > 0 ? 1 : -1));
}

}  // namespace

void Word::push_reduced(code_t c) {
  if (!codes_.empty() && codes_.back() == static_cast<code_t>(-c)) {
    codes_.pop_back();
  } else {
    codes_.push_back(c);
  }
}

Word Word::reduce_codes(std::span<const code_t> codes) {
  Word w;
  w.codes_.reserve(codes.size());
  for (code_t c : codes) w.push_reduced(c);
  return w;
}

Word Word::reduce(std::span<const Letter> letters) {
  Word w;
  w.codes_.reserve(letters.size());
  for (const Letter& l : letters) w.push_reduced(letter_code(l));
  return w;
}

Word Word::parse(const std::string& text) {
  Word w;
  w.codes_.reserve(text.size());
  for (char ch : text) {
    code_t c;
    switch (ch) {
      case 'a': c = +1; break;
      case 'A': c = -1; break;
      case 'b': c = +2; break;
      case 'B': c = -2; break;
      default:
        throw std::invalid_argument(std::string("word letter must be one of aAbB, got '") + ch + "'");
    }
    w.push_reduced(c);
  }
  return w;
}

Word Word::commutator_ab() { return parse("abAB"); }

Letter Word::letter_at(std::size_t i) const {
  code_t c = codes_[i];
  return Letter{static_cast<std::uint8_t>(std::abs(c) == 2 ? 1 : 0),
                static_cast<std::int8_t>(c > 0 ? +1 : -1)};
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.codes_.reserve(u.size() + v.size());
  for (Word::code_t c : v.codes_) w.push_reduced(c);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.codes_.reserve(codes_.size());
  for (auto it = codes_.rbegin(); it != codes_.rend(); ++it)
    w.codes_.push_back(static_cast<code_t>(-*it));
  return w;
}

Word Word::pow(long long n) const {
  if (n == 0) return Word();
  Word base = n > 0 ? *this : inverse();
  unsigned long long k = n > 0 ? static_cast<unsigned long long>(n)
                               : static_cast<unsigned long long>(-(n + 1)) + 1ull;
  Word acc;
  while (k > 0) {
    if (k & 1ull) acc = concat(acc, base);
    k >>= 1;
    if (k > 0) base = concat(base, base);
  }
  return acc;
}

Word::CyclicForm Word::cyclic_reduce() const {
  CyclicForm out;
  std::size_t lo = 0, hi = codes_.size();
  while (hi - lo >= 2 && codes_[lo] == static_cast<code_t>(-codes_[hi - 1])) {
    out.conjugator.codes_.push_back(codes_[lo]);
    ++lo;
    --hi;
  }
  out.core.codes_.assign(codes_.begin() + static_cast<std::ptrdiff_t>(lo),
                         codes_.begin() + static_cast<std::ptrdiff_t>(hi));
  return out;
}

bool Word::cyclically_reduced() const {
  if (codes_.size() < 2) return true;
  return codes_.front() != static_cast<code_t>(-codes_.back());
}

std::string Word::str() const {
  std::string s;
  s.reserve(codes_.size());
  for (code_t c : codes_) {
    switch (c) {
      case +1: s += 'a'; break;
      case -1: s += 'A'; break;
      case +2: s += 'b'; break;
      case -2: s += 'B'; break;
    }
  }
  return s;
}

long long exponent_sum(const Word& g, Word::code_t gen_code) {
  long long s = 0;
  for (Word::code_t c : g.codes()) {
    if (c == gen_code) ++s;
    if (c == static_cast<Word::code_t>(-gen_code)) --s;
  }
  return s;
}

long long count_subwords(const Word& pattern, const Word& g, bool cyclic) {
  const std::size_t m = pattern.size();
  if (m == 0) throw std::invalid_argument("count_subwords: empty pattern");
  const std::size_t n = g.size();
  if (n == 0) return 0;
  if (!cyclic && n < m) return 0;

  // KMP failure table for the pattern.
  std::vector<std::size_t> fail(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && pattern.code_at(i) != pattern.code_at(k)) k = fail[k - 1];
    if (pattern.code_at(i) == pattern.code_at(k)) ++k;
    fail[i] = k;
  }

  // In cyclic mode, scan the periodic extension long enough that every
  // starting position in the first period sees a full pattern length.
  const std::size_t scan_len = cyclic ? n + m - 1 : n;
  long long count = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < scan_len; ++i) {
    const Word::code_t c = g.code_at(i % n);
    while (k > 0 && c != pattern.code_at(k)) k = fail[k - 1];
    if (c == pattern.code_at(k)) ++k;
    if (k == m) {
      const std::size_t start = i + 1 - m;
      if (!cyclic || start < n) ++count;
      k = fail[k - 1];
    }
  }
  return count;
}

}  // namespace symqm
