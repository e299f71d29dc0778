#include "starpoly/deformation.hpp"

#include <algorithm>
#include <string>

namespace starpoly {

namespace {

void require_dim(const StarContext& ctx, const Poly& f) {
  if (f.dim() != ctx.n)
    throw DimensionError("polynomial of dimension " + std::to_string(f.dim()) + " used in a context with n = " +
                         std::to_string(ctx.n));
}

MultiIndex componentwise_min(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

/// prod_i e_i! / (e_i - g_i)!
Int falling_factorial(const MultiIndex& e, const MultiIndex& g) {
  Int out = 1;
  for (std::size_t i = 0; i < e.size(); ++i) out *= starpoly::falling_factorial(e[i], g[i]);
  return out;
}

}  // namespace

StarContext::StarContext(std::size_t n, Rat t) : n(n), t(std::move(t)) {
  if (n == 0) throw DimensionError("star context needs n >= 1");
}

Poly lambda_apply(const StarContext& ctx, const Poly& f) {
  require_dim(ctx, f);
  Poly out(ctx.n);
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < ctx.n; ++i) {
      if (m.xi[i] == 0 || m.z[i] == 0) continue;
      Monomial d = m;
      --d.xi[i];
      --d.z[i];
      out.add_term(d, c * static_cast<unsigned long>(m.xi[i]) * static_cast<unsigned long>(m.z[i]));
    }
  }
  return out;
}

Poly phi(const StarContext& ctx, const Poly& f) {
  require_dim(ctx, f);
  Poly out = f;
  Poly power = f;  // t^m Lambda^m f / m!
  for (unsigned m = 1; !power.is_zero(); ++m) {
    power = lambda_apply(ctx, power) * (ctx.t / m);
    out += power;
  }
  return out;
}

Poly star(const StarContext& ctx, const Poly& f, const Poly& g) {
  require_dim(ctx, f);
  require_dim(ctx, g);
  const Rat minus_t = -ctx.t;
  Poly out(ctx.n);
  if (ctx.t == 0) return f * g;
  for (const auto& [fm, fc] : f.terms()) {
    for (const auto& [gm, gc] : g.terms()) {
      // alpha hits z in f and xi in g; beta hits xi in f and z in g.
      const MultiIndex alpha_max = componentwise_min(fm.z, gm.xi);
      const MultiIndex beta_max = componentwise_min(fm.xi, gm.z);
      for_each_under(alpha_max, [&](const MultiIndex& alpha) {
        const Int a_part = falling_factorial(fm.z, alpha) * falling_factorial(gm.xi, alpha);
        const Rat a_scale = ratio(a_part, factorial(alpha));
        for_each_under(beta_max, [&](const MultiIndex& beta) {
          const Int b_part = falling_factorial(fm.xi, beta) * falling_factorial(gm.z, beta);
          const Rat coeff = fc * gc * a_scale * ratio(b_part, factorial(beta)) *
                            pow(minus_t, static_cast<unsigned>(alpha.total() + beta.total()));
          Monomial m{(fm.xi - beta) + (gm.xi - alpha), (fm.z - alpha) + (gm.z - beta)};
          out.add_term(m, coeff);
        });
      });
    }
  }
  return out;
}

Poly star_via_subst_xi(const StarContext& ctx, const Poly& lambda, const Poly& g) {
  require_dim(ctx, lambda);
  require_dim(ctx, g);
  if (!lambda.is_xi_only()) throw std::invalid_argument("star_via_subst_xi: first factor must not depend on z");
  Poly out(ctx.n);
  for (const auto& [m, c] : lambda.terms()) {
    Poly h = g;
    for (std::size_t i = 0; i < ctx.n; ++i)
      for (unsigned j = 0; j < m.xi[i]; ++j) h = Poly::xi(ctx.n, i) * h - ctx.t * d_z(h, i);
    out += c * h;
  }
  return out;
}

Poly star_via_subst_z(const StarContext& ctx, const ZPoly& p, const Poly& g) {
  require_dim(ctx, p);
  require_dim(ctx, g);
  Poly out(ctx.n);
  for (const auto& [m, c] : p.poly().terms()) {
    Poly h = g;
    for (std::size_t i = 0; i < ctx.n; ++i)
      for (unsigned j = 0; j < m.z[i]; ++j) h = Poly::z(ctx.n, i) * h - ctx.t * d_xi(h, i);
    out += c * h;
  }
  return out;
}

Poly star_monomial(const StarContext& ctx, const MultiIndex& alpha, const MultiIndex& beta) {
  if (alpha.size() != ctx.n || beta.size() != ctx.n) throw DimensionError("star_monomial: index length != n");
  return star(ctx, Poly::xi_power(alpha), Poly::z_power(beta));
}

Poly star_pow(const StarContext& ctx, const Poly& f, unsigned m) {
  require_dim(ctx, f);
  Poly out = Poly::constant(ctx.n, 1);
  for (unsigned j = 0; j < m; ++j) out = star(ctx, out, f);
  return out;
}

ZPoly eval_E(const StarContext& ctx, const Poly& f) {
  require_dim(ctx, f);
  Poly out(ctx.n);
  const MultiIndex zero(ctx.n);
  for (const auto& [m, c] : f.terms()) {
    if (!m.xi.fits_under(m.z)) continue;
    Rat coeff = c * Rat(falling_factorial(m.z, m.xi)) * pow(ctx.t, static_cast<unsigned>(m.xi.total()));
    out.add_term(Monomial{zero, m.z - m.xi}, coeff);
  }
  return ZPoly(std::move(out));
}

StarTaylor star_taylor(const StarContext& ctx, const Poly& f) {
  require_dim(ctx, f);
  StarTaylor st{ctx, {}};
  MultiIndex box(ctx.n);
  for (const auto& [m, c] : f.terms())
    for (std::size_t i = 0; i < ctx.n; ++i) box[i] = std::max(box[i], m.xi[i]);
  if (f.is_zero()) return st;
  for_each_under(box, [&](const MultiIndex& alpha) {
    ZPoly a = eval_E(ctx, d_multi(f, Var::Xi, alpha));
    if (!a.is_zero()) st.coefficients.emplace(alpha, std::move(a));
  });
  return st;
}

Poly StarTaylor::reconstruct() const {
  Poly out(ctx.n);
  for (const auto& [alpha, a] : coefficients)
    out += star(ctx, Poly::xi_power(alpha), a.poly()) * ratio(1, factorial(alpha));
  return out;
}

}  // namespace starpoly
