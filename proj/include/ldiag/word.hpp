#pragma once

#include <cstddef>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "ldiag/coeff.hpp"
#include "ldiag/monomial.hpp"

namespace ldiag {

// Word of monomials: a finite sequence of nonempty letters.  The empty word
// is the unit of concatenation.  Ordering is by length first, then letter by
// letter, which is also the canonical print order for linear combinations.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Monomial> letters);
  static Word single(const Monomial& m) { return Word({m}); }

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const Monomial& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Monomial>& letters() const { return letters_; }

  // Sum of the letter degrees (0 for the empty word).
  int degree() const;

  // Largest variable index used by any letter; 0 for the empty word, so that
  // shifting by an empty left factor is the identity translation.
  int max_index() const;

  Word translated(int n) const;
  Word concat(const Word& o) const;
  Word prepend(const Monomial& m) const;
  // Letters from position `from` (0-based) to the end.
  Word suffix(std::size_t from) const;
  Word segment(std::size_t from, std::size_t count) const;

  bool operator==(const Word& o) const = default;
  bool operator<(const Word& o) const;

 private:
  std::vector<Monomial> letters_;
};

// Formal Coeff-linear combination over an ordered basis, kept canonical: a
// zero coefficient is never stored.
template <class Basis>
class LinearCombo {
 public:
  using TermMap = std::map<Basis, Coeff>;

  LinearCombo() = default;
  static LinearCombo of(const Basis& b, const Coeff& c = Coeff::one()) {
    LinearCombo r;
    r.add(b, c);
    return r;
  }

  void add(const Basis& b, const Coeff& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, c);
    } else if ((it->second += c).is_zero()) {
      terms_.erase(it);
    }
  }

  LinearCombo& operator+=(const LinearCombo& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinearCombo& operator-=(const LinearCombo& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  LinearCombo& operator*=(const Coeff& c) {
    LinearCombo r;
    for (const auto& [b, t] : terms_) r.add(b, t * c);
    return *this = std::move(r);
  }
  friend LinearCombo operator+(LinearCombo a, const LinearCombo& b) { return a += b; }
  friend LinearCombo operator-(LinearCombo a, const LinearCombo& b) { return a -= b; }
  friend LinearCombo operator*(LinearCombo a, const Coeff& c) { return a *= c; }

  Coeff coeff_of(const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Coeff() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  bool operator==(const LinearCombo& o) const = default;

 private:
  TermMap terms_;
};

using Lin = LinearCombo<Word>;
using Tensor2 = LinearCombo<std::pair<Word, Word>>;
using Tensor3 = LinearCombo<std::tuple<Word, Word, Word>>;

// Bilinear extension of the Kronecker pairing <u|v> = delta_{u,v} on words.
Coeff pairing(const Lin& a, const Lin& b);

// Substitutes qc := vc, qs := vs in every coefficient.
Lin specialize(const Lin& a, long long vc, long long vs);

}  // namespace ldiag
