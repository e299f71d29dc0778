#pragma once

#include "starpoly/deformation.hpp"
#include "starpoly/poly_io.hpp"
#include "starpoly/sampling.hpp"
#include "starpoly/weyl.hpp"

#include <string>
#include <vector>

namespace starpoly::testing {

inline Poly P(const std::string& text, std::size_t n = 1) { return parse_poly(text, n); }
inline ZPoly Z(const std::string& text, std::size_t n = 1) { return ZPoly(parse_poly(text, n)); }
inline WeylOp W(const std::string& text, std::size_t n = 1) { return parse_weyl(text, n); }

inline const std::vector<Rat>& sample_ts() {
  static const std::vector<Rat> ts{Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(-2, 3)};
  return ts;
}

/// f *_t g from the operator exponential exp(-t Omega) applied to f (x) g,
/// expanded as sum_{a,b} (-t)^{|a|+|b|}/(a! b!) (d_xi^b d_z^a f)(d_z^b d_xi^a g)
/// with whole-polynomial derivatives. Shares no code with star().
Poly star_by_derivative_sum(const StarContext& ctx, const Poly& f, const Poly& g);

/// Dense evaluation oracle for operators: applies sum a_alpha d^alpha to p
/// one coordinate derivative at a time.
ZPoly apply_by_iterated_partials(const WeylOp& op, const ZPoly& p);

/// Membership in Im(xi - t d) decided by trying to peel off the leading
/// xi-power term by term (triangular reduction), independent of E_t and of
/// the linear solver.
bool image_by_reduction(const StarContext& ctx, Poly p);

}  // namespace starpoly::testing
