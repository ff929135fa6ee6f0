#pragma once

#include <string>

#include "ffsunit/ratfunc.hpp"

namespace ffsunit {

// Parse an expression in the variable x into a rational function.
//
// Grammar (whitespace allowed between tokens):
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | primary
//   primary := atom ('^' natural)?
//   atom    := integer | 'x' | '(' expr ')'
//
// Exponents must be bare nonnegative integer literals: "x^(-1)" and "x^-1"
// are syntax errors (write "1/x").  Division by a function that evaluates to
// zero raises DomainError.
RatFunc parse_ratfunc(const std::string& text);

// Convenience: parse and require a polynomial (denominator 1).
Poly parse_poly(const std::string& text);

} // namespace ffsunit
