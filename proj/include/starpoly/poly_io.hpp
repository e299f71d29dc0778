#pragma once

#include "starpoly/expr.hpp"
#include "starpoly/poly.hpp"
#include "starpoly/weyl.hpp"

#include <string>
#include <string_view>

namespace starpoly {

/// Polynomial in x1..xn (standing for xi) and z1..zn. Throws ParseError.
Poly parse_poly(std::string_view text, std::size_t n);

/// Canonical text: terms in descending graded-lex order, "a/b" coefficients,
/// unit coefficients and exponents of 1 elided, "0" for zero. Round-trips
/// through parse_poly.
std::string print_poly(const Poly& p);

/// Operator expression over z1..zn and d1..dn. A product means composition,
/// read left to right, so "z1^2*d1^3" is z1^2 o d1^3 while "d1*z1" is
/// z1 d1 + 1. The result is in right normal form.
WeylOp parse_weyl(std::string_view text, std::size_t n);

/// Right normal form, e.g. "z1^2*d1^3 + 6*z1*d1^2 + 6*d1". Round-trips
/// through parse_weyl.
std::string print_weyl(const WeylOp& op);

}  // namespace starpoly
