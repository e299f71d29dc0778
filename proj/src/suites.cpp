#include "starpoly/suites.hpp"

#include "starpoly/deformation.hpp"
#include "starpoly/laguerre.hpp"
#include "starpoly/mathieu.hpp"
#include "starpoly/weyl.hpp"

#include <stdexcept>

namespace starpoly {

namespace {

std::vector<MultiIndex> k_values(std::size_t n) {
  if (n == 1) return {MultiIndex{0}, MultiIndex{1}, MultiIndex{2}};
  return {MultiIndex{0, 0}, MultiIndex{1, 0}, MultiIndex{1, 1}};
}

std::string pair_label(const MultiIndex& a, const MultiIndex& b) { return "alpha=" + to_string(a) + " beta=" + to_string(b); }

CheckReport ortho(const SuiteBounds& b) {
  CheckReport report("ortho");
  for (std::size_t n : {1u, 2u}) {
    const auto alphas = indices_up_to(n, b.degmax);
    for (const auto& k : k_values(n)) {
      for (const auto& a : alphas) {
        const ZPoly la = laguerre(LaguerreSpec(a, k));
        for (const auto& be : alphas) {
          const Rat got = integrate_weight(la * laguerre(LaguerreSpec(be, k)), k);
          const Rat want = a == be ? ratio(factorial(a + k), factorial(a)) : Rat(0);
          report.record("weight k=" + to_string(k) + " " + pair_label(a, be), got == want,
                        got == want ? "" : "got " + to_string(got) + ", want " + to_string(want));
        }
      }
    }
  }
  const std::vector<std::vector<Rat>> points{{Rat(1)}, {Rat(2)}, {Rat(1, 2)}, {Rat(1), Rat(2)}};
  for (const auto& pt : points) {
    const std::size_t n = pt.size();
    const StarContext ctx(n, 1);
    const auto alphas = indices_up_to(n, b.degmax);
    std::string where = "xi=(";
    for (std::size_t i = 0; i < n; ++i) where += (i ? "," : "") + to_string(pt[i]);
    where += ")";
    for (const auto& a : alphas) {
      const Poly la = star_monomial(ctx, a, a);
      for (const auto& be : alphas) {
        const Rat got = integrate_weight_xi(la * star_monomial(ctx, be, be), pt);
        const Rat want = a == be ? Rat(factorial(a) * factorial(a)) : Rat(0);
        report.record("xi-weight " + where + " " + pair_label(a, be), got == want,
                      got == want ? "" : "got " + to_string(got) + ", want " + to_string(want));
      }
    }
  }
  return report;
}

CheckReport genfun(const SuiteBounds& b) {
  CheckReport report("genfun");
  for (unsigned k = 0; k <= b.kmax; ++k) report.merge(generating_check(k, b.order));
  for (unsigned k = 0; k <= b.kmax; ++k)
    for (unsigned m = 0; m <= b.order; ++m)
      report.record("dk m=" + std::to_string(m) + " k=" + std::to_string(k), identity_dk_check(m, k));
  for (std::size_t n : {1u, 2u}) {
    for (const auto& k : indices_up_to(n, b.kmax)) {
      for (const auto& a : indices_up_to(n, b.degmax)) {
        const LaguerreSpec spec(a, k);
        const ZPoly explicit_form = laguerre(spec);
        const bool ok = explicit_form == laguerre_from_star_at_one(spec) &&
                        explicit_form == laguerre_from_generating(spec) &&
                        laguerre_star(spec) == laguerre_star_z(spec);
        report.record("three-way alpha=" + to_string(a) + " k=" + to_string(k), ok);
      }
    }
  }
  return report;
}

CheckReport starexp(const SuiteBounds& b) {
  CheckReport report("starexp");
  for (std::size_t n : {1u, 2u})
    for (const auto& k : k_values(n)) report.merge(star_exp_check(k, n == 1 ? b.order : std::min(b.order, 4u)));
  return report;
}

CheckReport even(const SuiteBounds& b) {
  CheckReport report("even");
  for (std::size_t n : {1u, 2u}) {
    const auto idx = indices_up_to(n, b.degmax);
    for (const auto& a : idx)
      for (const auto& be : idx) report.record(pair_label(a, be), even_identity_check(a, be));
  }
  return report;
}

CheckReport interchange(const SuiteBounds& b) {
  CheckReport report("interchange");
  for (std::size_t n : {1u, 2u}) {
    const StarContext plus(n, 1), minus(n, -1);
    for (const auto& a : indices_up_to(n, b.degmax)) {
      for (const auto& be : indices_up_to(n, b.degmax - std::min<unsigned>(b.degmax, static_cast<unsigned>(a.total())))) {
        const Poly p = Poly::term(a, be);
        report.record("R o L^-1 " + pair_label(a, be), right_symbol(from_left_symbol(p)) == phi(plus, p));
        report.record("L o R^-1 " + pair_label(a, be), left_symbol(from_right_symbol(p)) == phi(minus, p));
        const WeylOp lambda_p = weyl_compose(WeylOp::partial_power(a), WeylOp::multiplication(ZPoly(Poly::z_power(be))));
        const WeylOp p_lambda = weyl_compose(WeylOp::multiplication(ZPoly(Poly::z_power(be))), WeylOp::partial_power(a));
        report.record("R(d^a z^b) " + pair_label(a, be), right_symbol(lambda_p) == star_monomial(minus, a, be));
        report.record("L(z^b d^a) " + pair_label(a, be), left_symbol(p_lambda) == star_monomial(plus, a, be));
      }
    }
  }
  return report;
}

CheckReport oracles(const SuiteBounds& b) {
  CheckReport report("oracles");
  for (const auto& t : b.ts)
    for (std::size_t n : {1u, 2u}) report.merge(oracle_equivalence_scan(t, n, b.degmax));
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ortho", "recur", "ode", "genfun", "starexp", "even", "interchange", "oracles"};
  return names;
}

CheckReport run_suite(std::string_view name, const SuiteBounds& bounds) {
  if (name == "ortho") return ortho(bounds);
  if (name == "recur") return recurrence_check(std::max(1u, bounds.mmax));
  if (name == "ode") return ode_check(bounds.mmax, bounds.kmax);
  if (name == "genfun") return genfun(bounds);
  if (name == "starexp") return starexp(bounds);
  if (name == "even") return even(bounds);
  if (name == "interchange") return interchange(bounds);
  if (name == "oracles") return oracles(bounds);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace starpoly
