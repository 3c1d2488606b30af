#pragma once

#include <string>

#include "ldiag/word.hpp"

namespace ldiag {

// Text grammar shared by the CLI and the tests:
//
//   word   := "1" | mono ("." mono)*
//   mono   := factor ("*" factor)*
//   factor := "x" INT ("^" INT)?
//
// Whitespace around "." and "*" is ignored.  Example:
// "x2^2*x3 . x1*x2*x3^3 . x3*x4^2".
//
// Linear combinations render as "+"-separated terms, each a coefficient
// prefix followed by a word, e.g. "x1.x2 + qc*x2.x1 + qs*x1*x2" or
// "(1+qc)*x1.x1 + qs*x1^2".  Coefficients render as integer polynomials in
// qc, qs, e.g. "1 + 2*qc + qc^2*qs".  All renderers emit the canonical form
// (terms in basis order, no redundant whitespace), which parses back to the
// same value.

Word parse_word(const std::string& text);
Lin parse_lin(const std::string& text);
Coeff parse_coeff(const std::string& text);

std::string render_monomial(const Monomial& m);
std::string render_word(const Word& w);
std::string render_coeff(const Coeff& c);
std::string render_lin(const Lin& l);
std::string render_tensor2(const Tensor2& t);

}  // namespace ldiag
