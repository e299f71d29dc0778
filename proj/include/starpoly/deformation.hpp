#pragma once

#include "starpoly/poly.hpp"

#include <map>

namespace starpoly {

/// Fixes the deformed algebra: dimension n and deformation parameter t.
/// t = 0 gives back ordinary polynomial multiplication.
struct StarContext {
  std::size_t n;
  Rat t;

  StarContext(std::size_t n, Rat t);

  /// Same n, parameter -t.
  StarContext negated() const { return StarContext(n, -t); }
};

/// Lambda f = sum_i d/dxi_i d/dz_i f.
Poly lambda_apply(const StarContext& ctx, const Poly& f);

/// Phi_t f = sum_m t^m Lambda^m f / m!. Lambda is locally nilpotent, so the
/// sum stops after at most min(deg_xi f, deg_z f) + 1 terms. Phi_{-t} is the
/// inverse.
Poly phi(const StarContext& ctx, const Poly& f);

/// The deformed product f *_t g, from the closed form
///
///   sum_{a,b} (-t)^{|a|+|b|} / (a! b!) (d_xi^b d_z^a f)(d_z^b d_xi^a g).
///
/// Evaluated monomial pair by monomial pair so only the finitely many (a, b)
/// with both derivative factors nonzero are visited.
Poly star(const StarContext& ctx, const Poly& f, const Poly& g);

/// lambda(xi - t d_z) applied to g, by iterating the operator xi_i - t d_z_i.
/// lambda must be free of z.
Poly star_via_subst_xi(const StarContext& ctx, const Poly& lambda, const Poly& g);

/// p(z - t d_xi) applied to g, by iterating the operator z_i - t d_xi_i.
Poly star_via_subst_z(const StarContext& ctx, const ZPoly& p, const Poly& g);

/// xi^alpha *_t z^beta.
Poly star_monomial(const StarContext& ctx, const MultiIndex& alpha, const MultiIndex& beta);

/// m-fold *_t power; m = 0 gives 1.
Poly star_pow(const StarContext& ctx, const Poly& f, unsigned m);

/// E_t: xi^b z^c -> t^{|b|} d_z^b (z^c), extended linearly. The deformed
/// analogue of evaluation at xi = 0; a homomorphism (C[xi,z], *_t) -> C[z].
ZPoly eval_E(const StarContext& ctx, const Poly& f);

/// Expansion f = sum_alpha (1/alpha!) xi^alpha *_t a_alpha(z) with
/// a_alpha = E_t(d_xi^alpha f). Only nonzero a_alpha are stored.
struct StarTaylor {
  StarContext ctx;
  std::map<MultiIndex, ZPoly> coefficients;

  /// sum_alpha (1/alpha!) xi^alpha *_t a_alpha.
  Poly reconstruct() const;
};

StarTaylor star_taylor(const StarContext& ctx, const Poly& f);

}  // namespace starpoly
