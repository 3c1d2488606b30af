#pragma once

#include <cstddef>
#include <vector>

#include "ldiag/word.hpp"

namespace ldiag {

// Irreducibility in the shifted-concatenation monoid.  A nonempty word is
// reducible iff some cut splits it so that every variable index of the
// prefix is strictly below every index of the suffix; irreducible words are
// the free generators.
bool is_irreducible(const Word& w);  // throws EmptyWordError

// Factorization into irreducibles: each factor translated down so that
// recombining with shifted_concat reproduces the word exactly.
struct Factorization {
  std::vector<Word> factors;

  std::size_t length() const { return factors.size(); }
  Word recombine() const;
  bool operator==(const Factorization& o) const = default;
};

Factorization factorize(const Word& w);  // throws EmptyWordError

// Number of irreducible components l(w); 0 for the empty word.
std::size_t filtration_length(const Word& w);

// Evidence for freeness: in infil_shifted(u, v) the shifted concatenation
// carries coefficient exactly 1 and every other term drops strictly in the
// filtration by number of irreducible components.
struct TriangularityReport {
  bool pass = false;
  bool leading_coeff_ok = false;
  Coeff leading_coeff;
  Word leading;
  // Terms that fail the strict filtration drop, with their lengths.
  std::vector<std::pair<Word, std::size_t>> violations;
};

TriangularityReport triangularity_check(const Word& u, const Word& v);

}  // namespace ldiag
