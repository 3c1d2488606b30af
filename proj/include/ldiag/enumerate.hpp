#pragma once

#include <vector>

#include "ldiag/diagram.hpp"
#include "ldiag/word.hpp"

namespace ldiag {

// Nonempty monomials over variables x_1..x_nvars of total degree exactly d.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

// Words over x_1..x_nvars of total degree exactly d (d = 0 gives the unit).
std::vector<Word> words_of_degree(int nvars, int d);

// Words of total degree <= d, unit word included.
std::vector<Word> words_up_to_degree(int nvars, int d);

// Words of single-variable exponent-1 letters with given length.
std::vector<Word> letter_words_of_length(int nvars, int length);

// Codes of every diagram with exactly n edges (n >= 1).
std::vector<Word> code_words_of_degree(int n);

}  // namespace ldiag
