#pragma once

#include <random>

#include "ldiag/law.hpp"
#include "ldiag/word.hpp"

namespace ldiag {

// Deterministic generator of random algebra values for the seeded suites.
class RandomGen {
 public:
  explicit RandomGen(unsigned long long seed) : rng_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  Monomial monomial(int max_var, int max_degree);
  // Word with total degree at most max_degree (may be empty when
  // allow_empty).
  Word word(int max_var, int max_degree, bool allow_empty = true);
  Word letter_word(int max_var, int max_len, bool allow_empty = false);
  Coeff coeff(int max_deg = 2, int max_abs = 3, int max_terms = 3);
  Lin lin(int max_var, int max_degree, int max_terms = 3);
  // Nonempty word with no valid majoration cut.
  Word irreducible_word(int max_var, int max_degree);
  // Random member of the given letter-word class.
  Word in_class_word(WordClass c, int max_len);

 private:
  std::mt19937_64 rng_;
};

}  // namespace ldiag
