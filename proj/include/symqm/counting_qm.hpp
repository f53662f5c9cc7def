#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symqm/word.hpp"

namespace symqm {

/// A weighted family of pattern words defining a homogeneous Brooks-type
/// counting quasi-morphism on F(a,b).
///
/// The value on g is computed exactly on the cyclic core of g (see qm_eval),
/// so homogeneity and conjugation invariance hold in integer arithmetic, not
/// merely in the limit.
class CountingQM {
public:
  struct Term {
    Word pattern;  // nonempty, freely reduced
    double weight = 1.0;
  };

  CountingQM(std::string name, std::vector<Term> terms);

  const std::string& name() const { return name_; }
  const std::vector<Term>& terms() const { return terms_; }

  double max_abs_weight() const;

  /// Empirical lower bound for the defect C(mu), when one has been recorded.
  std::optional<double> defect_bound() const { return defect_bound_; }
  void set_defect_bound(double d) { defect_bound_ = d; }

private:
  std::string name_;
  std::vector<Term> terms_;
  std::optional<double> defect_bound_;
};

/// Homogeneous value of mu at g: cyclically reduce g to its core c and sum
/// weight * (C_w(c, cyclic) - C_{w^-1}(c, cyclic)) over the terms.
double qm_eval(const CountingQM& mu, const Word& g);

/// Max of |mu(xy) - mu(x) - mu(y)| over `budget` random reduced pairs with
/// word lengths <= max_len. Deterministic for a fixed seed; a lower bound for
/// the true defect C(mu).
double defect_estimate(const CountingQM& mu, long long budget, int max_len,
                       std::uint64_t seed);

/// The four kernels shipped with the library:
///   hom-a    {(a,1)}    exponent-sum homomorphism (zero defect)
///   comm-ab  {(ab,1)}   mu([a,b]) = 1
///   null-aab {(aab,1)}  mu([a,b]) = 0
///   null-abb {(abb,1)}  mu([a,b]) = 0
const std::vector<CountingQM>& kernel_library();
const CountingQM& kernel_by_name(const std::string& name);

/// Uniformly random freely reduced word of the exact given length.
Word random_reduced_word(int length, std::uint64_t& state);

}  // namespace symqm
