#pragma once

#include <map>

namespace ldiag {

// Element of the free commutative semigroup over the variables x_1, x_2, ...
// stored as a sparse exponent map.  The empty map is the unit monomial; it is
// allowed as a value but never as a letter of a word.
class Monomial {
 public:
  using ExpMap = std::map<int, int>;  // variable index (>=1) -> exponent (>=1)

  Monomial() = default;  // the unit
  static Monomial var(int index, int exponent = 1);
  static Monomial from_exps(ExpMap exps);

  bool is_unit() const { return exps_.empty(); }
  const ExpMap& exps() const { return exps_; }

  // Total degree: sum of all exponents.  Additive under times().
  int degree() const;

  // Largest variable index occurring; 0 for the unit.
  int max_index() const { return exps_.empty() ? 0 : exps_.rbegin()->first; }
  int min_index() const { return exps_.empty() ? 0 : exps_.begin()->first; }

  // Commutative product: exponentwise sum.
  Monomial times(const Monomial& o) const;

  // Variable shift x_i -> x_{i+n}.  n may be negative as long as every
  // resulting index stays positive.
  Monomial translated(int n) const;

  bool operator==(const Monomial& o) const = default;
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

 private:
  ExpMap exps_;
};

}  // namespace ldiag
