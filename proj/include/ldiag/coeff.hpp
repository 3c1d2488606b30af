#pragma once

#include <map>
#include <optional>
#include <utility>

namespace ldiag {

// Exact bivariate polynomial in the deformation parameters qc and qs with
// integer coefficients.  This is the scalar ring of the whole library.
//
// Terms are keyed by (degree in qc, degree in qs); a zero coefficient is
// never stored, so the defaulted equality is exact polynomial equality and
// map order is the canonical print order.
class Coeff {
 public:
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, long long>;

  Coeff() = default;  // the zero polynomial

  static Coeff integer(long long n);
  static Coeff one() { return integer(1); }
  static Coeff qc(int power = 1) { return term(power, 0, 1); }
  static Coeff qs(int power = 1) { return term(0, power, 1); }
  static Coeff term(int qc_deg, int qs_deg, long long c);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const TermMap& terms() const { return terms_; }

  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff operator-() const;

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

  bool operator==(const Coeff& o) const = default;
  bool operator<(const Coeff& o) const { return terms_ < o.terms_; }

  // Substitutes qc := vc, qs := vs and evaluates exactly.
  long long eval(long long vc, long long vs) const;

  // Substitutes only the given parameters, keeping the others symbolic.
  Coeff substitute(std::optional<long long> vc, std::optional<long long> vs) const;

 private:
  TermMap terms_;
};

}  // namespace ldiag
