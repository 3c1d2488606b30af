#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ldiag/word.hpp"

namespace ldiag {

// Twisting factor chi on pairs of degrees (naturals under addition here).
// Valid colour factors satisfy the cocycle equation
//   chi(b1,a2) chi(b1+b2,a3) = chi(b2,a3) chi(b1,a2+a3)
// which is exactly what makes the twisted tensor product associative.
struct ColourFactor {
  std::string name;
  std::function<Coeff(int, int)> chi;

  Coeff operator()(int a, int b) const { return chi(a, b); }
};

struct CocycleCheck {
  bool ok = true;
  // Violating tuple (b1, b2, a2, a3) when ok is false.
  std::array<int, 4> violation{};
};

// Checks the cocycle equation over all tuples drawn from `sample` (the
// checker forms the needed sums itself); reports the first counterexample.
CocycleCheck is_colour_factor(const ColourFactor& chi, const std::vector<int>& sample);

enum class DeformParam { qc, qs };

// Bicharacter q^{rule(a,b)} for a bilinear exponent rule; bicharacters are
// automatically colour factors.
ColourFactor bicharacter_pow(std::function<int(int, int)> exponent_rule, DeformParam which);

ColourFactor constant_factor(const Coeff& c);

// Factors selectable by name: "const:<int>", "qc-bichar", "qs-bichar",
// "perturbed" (a rejected example).  Throws Error on an unknown name.
ColourFactor named_colour_factor(const std::string& name);

// The crossing bicharacter on words, qc^{|u| |v|} on total degrees; this is
// the product over all letter pairs of qc^{|u[i]| |v[j]|}.
Coeff word_crossing_factor(const Word& u, const Word& v);

// Multiplication on the chi-coloured tensor square: (x1 (x) y1)(x2 (x) y2) =
// chi(deg y1, deg x2) (x1x2 (x) y1y2), word product being concatenation.
Tensor2 coloured_mul(const ColourFactor& chi, const std::pair<Word, Word>& t1,
                     const std::pair<Word, Word>& t2);
Tensor2 coloured_mul(const ColourFactor& chi, const Tensor2& t1, const Tensor2& t2);

// Diagonal deformation of the monomial semigroup: a ._chi b = chi(|a|,|b|) ab.
std::pair<Coeff, Monomial> diag_deform_product(const ColourFactor& chi, const Monomial& a,
                                               const Monomial& b);

// All ordered pairs (r,t) of nonempty monomials with r.t = m; the count is
// prod(e_i + 1) - 2 over the exponents of m.
std::vector<std::pair<Monomial, Monomial>> mono_factorizations(const Monomial& m);

// Superposition part of the letter coproduct:
// delta1(m) = sum_{rt=m} qs^{|r||t|} r (x) t.
Tensor2 delta1(const Monomial& m);

// The full coproduct: delta(m) = m (x) 1 + 1 (x) m + delta1(m) on letters,
// extended to words as a morphism into the qc-coloured tensor square.
Tensor2 delta(const Word& w);

// The law dual to delta under the Kronecker pairing on words.  Candidate
// output words are generated from the shuffle-with-superposition maps, which
// is complete; the result coincides with infil(u, v).
Lin dual_product(const Word& u, const Word& v);

enum class LetterCoproductKind { shuffle, hadamard, infiltration, q_deformed };

struct LetterCoproduct {
  LetterCoproductKind kind = LetterCoproductKind::shuffle;
  Coeff q;  // used by q_deformed: delta_q(x) = x (x) 1 + 1 (x) x + q (x (x) x)

  static LetterCoproduct shuffle() { return {LetterCoproductKind::shuffle, Coeff()}; }
  static LetterCoproduct hadamard() { return {LetterCoproductKind::hadamard, Coeff()}; }
  static LetterCoproduct infiltration() {
    return {LetterCoproductKind::infiltration, Coeff()};
  }
  static LetterCoproduct q_deformed(const Coeff& q) {
    return {LetterCoproductKind::q_deformed, q};
  }
};

// Classical coproducts on words of degree-1 single-variable letters,
// extended as algebra morphisms with the uncoloured tensor product.
// Throws NotLetterWordError on other words.
Tensor2 letter_coproduct(const LetterCoproduct& lc, const Word& w);

// Dual law of a classical letter coproduct: shuffle, Hadamard (diagonal) or
// infiltration product on letter words.
Lin letter_dual_product(const LetterCoproduct& lc, const Word& u, const Word& v);

// Element x + alpha.v of an algebra with adjoined unit v, or y + beta.u of a
// coalgebra with grouplike u; the body carries no unit-word component.
struct AugmentedVec {
  Lin body;
  Coeff unit_coeff;

  static AugmentedVec from_lin(const Lin& l);
  Lin to_lin() const;
};

// <x + alpha v | y + beta u>_* = <x|y> + beta alpha.
Coeff extended_pairing(const AugmentedVec& a, const AugmentedVec& b);

using CoproductFn = std::function<Tensor2(const Word&)>;

// (delta (x) Id) and (Id (x) delta) lifted to tensor values, for
// coassociativity checks of any word coproduct.
Tensor3 coproduct_left(const Tensor2& t, const CoproductFn& dl);
Tensor3 coproduct_right(const Tensor2& t, const CoproductFn& dl);

}  // namespace ldiag
