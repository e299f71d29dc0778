#include "support.hpp"

namespace starpoly::testing {

Poly star_by_derivative_sum(const StarContext& ctx, const Poly& f, const Poly& g) {
  const auto fd = f.degree();
  const auto gd = g.degree();
  Poly out(ctx.n);
  if (fd.total < 0 || gd.total < 0) return out;
  const unsigned bound_a = static_cast<unsigned>(std::min(fd.z, gd.xi));
  const unsigned bound_b = static_cast<unsigned>(std::min(fd.xi, gd.z));
  for (const auto& a : indices_up_to(ctx.n, bound_a)) {
    for (const auto& b : indices_up_to(ctx.n, bound_b)) {
      const Poly left = d_multi(d_multi(f, Var::Xi, b), Var::Z, a);
      const Poly right = d_multi(d_multi(g, Var::Z, b), Var::Xi, a);
      if (left.is_zero() || right.is_zero()) continue;
      Rat c = pow(Rat(-ctx.t), static_cast<unsigned>(a.total() + b.total()));
      c /= Rat(factorial(a) * factorial(b));
      out += c * (left * right);
    }
  }
  return out;
}

ZPoly apply_by_iterated_partials(const WeylOp& op, const ZPoly& p) {
  ZPoly out(op.dim());
  for (const auto& [alpha, a] : op.terms()) {
    ZPoly q = p;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (unsigned j = 0; j < alpha[i]; ++j) q = d_z(q, i);
    out = out + a * q;
  }
  return out;
}

bool image_by_reduction(const StarContext& ctx, Poly p) {
  for (;;) {
    const Monomial* pick = nullptr;
    for (const auto& [m, c] : p.terms()) {
      if (m.xi.is_zero()) continue;
      if (!pick || m.xi.total() > pick->xi.total()) pick = &m;
    }
    if (!pick) return p.is_zero();
    const Monomial m = *pick;
    const Rat c = p.coefficient(m);
    std::size_t i = 0;
    while (m.xi[i] == 0) ++i;
    const Poly g = Poly::term(m.xi - MultiIndex::unit(ctx.n, i), m.z, c);
    p -= Poly::xi(ctx.n, i) * g - ctx.t * d_z(g, i);
  }
}

}  // namespace starpoly::testing
