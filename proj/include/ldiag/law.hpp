#pragma once

#include <functional>
#include <optional>

#include "ldiag/word.hpp"

namespace ldiag {

// Specialization of the two deformation parameters.  A missing value keeps
// the parameter symbolic, in which case coefficients stay exact polynomials.
struct LawParams {
  std::optional<long long> qc_value;
  std::optional<long long> qs_value;

  bool symbolic() const { return !qc_value && !qs_value; }
  Coeff apply(const Coeff& c) const { return c.substitute(qc_value, qs_value); }
  Lin apply(const Lin& l) const;
};

// The two-parameter deformed infiltration product on words of monomials:
//
//   1 ^ w = w ^ 1 = w
//   au ^ bv = a(u ^ bv) + qc^{|au||b|} b(au ^ v)
//           + qc^{|u||b|} qs^{|a||b|} (a.b)(u ^ v)
//
// with |.| the total degree and a.b the commutative monomial product.  The
// result is graded: every output word has degree |u| + |v|.
Lin infil(const Word& u, const Word& v);

// Bilinear extension of infil.
Lin infil_lin(const Lin& a, const Lin& b);

// u followed by v with v's variables shifted past u's: u . T_{max_index(u)}(v).
Word shifted_concat(const Word& u, const Word& v);

// The product law on diagram codes: infil(u, T_{max_index(u)}(v)).
Lin infil_shifted(const Word& u, const Word& v);

using WordLaw = std::function<Lin(const Word&, const Word&)>;
using GradeFn = std::function<int(const Word&)>;
using TranslateFn = std::function<Word(const Word&, int)>;

// Generic shifting construction: u star T_{grade_of(u)}(v).  Instantiating
// star with concatenation or infil recovers shifted_concat / infil_shifted;
// the construction preserves associativity of any law graded for it.
Lin shifted_law_generic(const WordLaw& star, const GradeFn& grade_of,
                        const TranslateFn& translate_by, const Word& u, const Word& v);

// Bilinear extension of a shifted law, shifting each left term by its own grade.
Lin shifted_law_lin(const WordLaw& star, const GradeFn& grade_of,
                    const TranslateFn& translate_by, const Lin& a, const Lin& b);

enum class WordClass {
  packed,               // indices used form an interval [1..q]
  injective,            // no letter occurs twice
  permutation,          // packed and injective
  increasing,           // index sequence weakly increasing
  strictly_increasing,  // index sequence strictly increasing
  disconnected,         // some position r < k with index j_r + 1 unused
};

// Membership predicate on words whose letters are single variables with
// exponent 1; throws NotLetterWordError otherwise.
bool word_class(const Word& w, WordClass c);

}  // namespace ldiag
