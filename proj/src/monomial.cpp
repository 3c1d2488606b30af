#include "ldiag/monomial.hpp"

#include "ldiag/errors.hpp"

namespace ldiag {

Monomial Monomial::var(int index, int exponent) {
  if (index < 1) throw Error("variable index must be positive");
  if (exponent < 1) throw Error("exponent must be positive");
  Monomial m;
  m.exps_[index] = exponent;
  return m;
}

Monomial Monomial::from_exps(ExpMap exps) {
  for (const auto& [i, e] : exps) {
    if (i < 1) throw Error("variable index must be positive");
    if (e < 1) throw Error("exponent must be positive");
  }
  Monomial m;
  m.exps_ = std::move(exps);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [i, e] : exps_) d += e;
  return d;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r = *this;
  for (const auto& [i, e] : o.exps_) r.exps_[i] += e;
  return r;
}

Monomial Monomial::translated(int n) const {
  Monomial r;
  for (const auto& [i, e] : exps_) {
    if (i + n < 1) throw Error("translation would leave the variable range");
    r.exps_[i + n] = e;
  }
  return r;
}

}  // namespace ldiag
