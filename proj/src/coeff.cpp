#include "ldiag/coeff.hpp"

namespace ldiag {

Coeff Coeff::integer(long long n) { return term(0, 0, n); }

Coeff Coeff::term(int qc_deg, int qs_deg, long long c) {
  Coeff r;
  if (c != 0) r.terms_[{qc_deg, qs_deg}] = c;
  return r;
}

bool Coeff::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
         terms_.begin()->second == 1;
}

Coeff& Coeff::operator+=(const Coeff& o) {
  for (const auto& [k, c] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else if ((it->second += c) == 0) {
      terms_.erase(it);
    }
  }
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) { return *this += -o; }

Coeff Coeff::operator-() const {
  Coeff r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

Coeff operator*(const Coeff& a, const Coeff& b) {
  Coeff r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r += Coeff::term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

namespace {
long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}
}  // namespace

long long Coeff::eval(long long vc, long long vs) const {
  long long r = 0;
  for (const auto& [k, c] : terms_) r += c * ipow(vc, k.first) * ipow(vs, k.second);
  return r;
}

Coeff Coeff::substitute(std::optional<long long> vc, std::optional<long long> vs) const {
  Coeff r;
  for (const auto& [k, c] : terms_) {
    long long v = c;
    int i = k.first, j = k.second;
    if (vc) {
      v *= ipow(*vc, i);
      i = 0;
    }
    if (vs) {
      v *= ipow(*vs, j);
      j = 0;
    }
    r += Coeff::term(i, j, v);
  }
  return r;
}

}  // namespace ldiag
