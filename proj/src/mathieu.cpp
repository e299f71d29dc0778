#include "starpoly/mathieu.hpp"

#include "starpoly/exact_solve.hpp"
#include "starpoly/laguerre.hpp"
#include "starpoly/sampling.hpp"

#include <map>
#include <string>

namespace starpoly {

bool in_image_Et(const StarContext& ctx, const Poly& p) { return eval_E(ctx, p).is_zero(); }

std::optional<std::vector<Poly>> image_witness(const StarContext& ctx, const Poly& p,
                                               std::optional<int> witness_degree) {
  if (p.dim() != ctx.n) throw DimensionError("image_witness: dimension mismatch");
  const std::size_t n = ctx.n;
  const int bound = witness_degree.value_or(p.degree().total - 1);
  if (p.is_zero()) return std::vector<Poly>(n, Poly(n));
  if (bound < 0) return std::nullopt;

  // Unknown columns: (i, monomial) for every g_i monomial of degree <= bound.
  std::vector<std::pair<std::size_t, Monomial>> unknowns;
  for (const auto& both : indices_up_to(2 * n, static_cast<std::uint64_t>(bound))) {
    Monomial m{MultiIndex(n), MultiIndex(n)};
    for (std::size_t i = 0; i < n; ++i) {
      m.xi[i] = both[i];
      m.z[i] = both[n + i];
    }
    for (std::size_t i = 0; i < n; ++i) unknowns.emplace_back(i, m);
  }

  std::vector<Poly> images;
  images.reserve(unknowns.size());
  std::map<Monomial, std::size_t, GrlexDescending> rows;
  auto row_of = [&rows](const Monomial& m) { return rows.try_emplace(m, rows.size()).first->second; };
  for (const auto& [i, m] : unknowns) {
    const Poly g = Poly::term(m.xi, m.z);
    images.push_back(Poly::xi(n, i) * g - ctx.t * d_z(g, i));
    for (const auto& [mm, c] : images.back().terms()) row_of(mm);
  }
  for (const auto& [mm, c] : p.terms()) row_of(mm);

  RatMatrix a(rows.size(), unknowns.size());
  std::vector<Rat> rhs(rows.size());
  for (std::size_t col = 0; col < images.size(); ++col)
    for (const auto& [mm, c] : images[col].terms()) a.at(rows.at(mm), col) = c;
  for (const auto& [mm, c] : p.terms()) rhs[rows.at(mm)] = c;

  auto x = solve_exact(std::move(a), std::move(rhs));
  if (!x) return std::nullopt;
  std::vector<Poly> g(n, Poly(n));
  for (std::size_t col = 0; col < unknowns.size(); ++col)
    g[unknowns[col].first].add_term(unknowns[col].second, (*x)[col]);
  return g;
}

bool in_image_linear(const StarContext& ctx, const Poly& p, std::optional<int> witness_degree) {
  return image_witness(ctx, p, witness_degree).has_value();
}

bool in_laguerre_span(const ZPoly& p, const MultiIndex& k) { return integrate_weight(p, k) == 0; }

bool MembershipOracle::contains(const Poly& p) const {
  switch (kind) {
    case OracleKind::ImageEt:
      return in_image_Et(StarContext(p.dim(), t), p);
    case OracleKind::ImageLinear:
      return in_image_linear(StarContext(p.dim(), t), p);
    case OracleKind::LaguerreSpan:
      return in_laguerre_span(ZPoly(p), k);
  }
  return false;
}

std::string to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::ImageEt:
      return "image_Et";
    case OracleKind::ImageLinear:
      return "image_linear";
    case OracleKind::LaguerreSpan:
      return "laguerre_span";
  }
  return "?";
}

bool ExperimentReport::all_powers_member() const {
  for (const auto& v : verdicts)
    if (!v.power_member) return false;
  return true;
}

ExperimentReport power_experiment(const MembershipOracle& oracle, const Poly& f, const Poly& b, unsigned mmax,
                                  const PowerRule& rule, int degree_cap) {
  if (mmax < 1) throw std::invalid_argument("power_experiment needs mmax >= 1");
  if (f.dim() != b.dim()) throw DimensionError("power_experiment: f and b differ in dimension");
  if (rule.kind == PowerRule::Kind::Star && !oracle.is_image())
    throw std::invalid_argument("star powers pair with an image oracle");
  if (oracle.kind == OracleKind::LaguerreSpan && (!f.is_z_only() || !b.is_z_only()))
    throw std::invalid_argument("the Laguerre span oracle takes polynomials in z only");

  const StarContext ctx(f.dim(), rule.t);
  auto multiply = [&](const Poly& x, const Poly& y) {
    return rule.kind == PowerRule::Kind::Star ? star(ctx, x, y) : x * y;
  };
  auto guard = [&](const Poly& p, unsigned m, const char* what) {
    if (p.degree().total > degree_cap)
      throw DegreeCapExceeded(std::string(what) + " at m=" + std::to_string(m) + " has degree " +
                              std::to_string(p.degree().total) + " > cap " + std::to_string(degree_cap));
  };

  ExperimentReport report{oracle, rule, f, b, {}, std::nullopt};
  Poly power = Poly::constant(f.dim(), 1);
  for (unsigned m = 1; m <= mmax; ++m) {
    power = multiply(power, f);
    guard(power, m, "f^m");
    const Poly product = multiply(b, power);
    guard(product, m, "b f^m");
    report.verdicts.push_back(PowerVerdict{m, oracle.contains(power), oracle.contains(product), power});
  }
  for (unsigned N = mmax; N >= 1 && report.verdicts[N - 1].product_member; --N) report.first_stable_N = N;
  return report;
}

namespace {

std::string describe(const Monomial& m) { return "xi^" + to_string(m.xi) + " z^" + to_string(m.z); }

}  // namespace

CheckReport oracle_equivalence_scan(const Rat& t, std::size_t n, unsigned degmax, unsigned random_samples,
                                    std::uint64_t seed) {
  const StarContext ctx(n, t);
  CheckReport report("oracles");
  const std::string tag = " t=" + to_string(t);
  for (const auto& both : indices_up_to(2 * n, degmax)) {
    Monomial m{MultiIndex(n), MultiIndex(n)};
    for (std::size_t i = 0; i < n; ++i) {
      m.xi[i] = both[i];
      m.z[i] = both[n + i];
    }
    const Poly p = Poly::term(m.xi, m.z);
    const bool by_e = in_image_Et(ctx, p);
    const bool by_solve = in_image_linear(ctx, p);
    report.record(describe(m) + tag, by_e == by_solve,
                  by_e == by_solve ? "" : std::string("E_t says ") + (by_e ? "member" : "non-member"));
  }
  PolySampler sampler(seed);
  for (unsigned s = 0; s < random_samples; ++s) {
    Poly p = sampler.poly(n, degmax, 6);
    // Half the samples are pushed into the image so both verdicts occur.
    if (s % 2) p -= eval_E(ctx, p).poly();
    const bool by_e = in_image_Et(ctx, p);
    const bool by_solve = in_image_linear(ctx, p);
    report.record("random #" + std::to_string(s) + tag, by_e == by_solve);
  }
  return report;
}

}  // namespace starpoly
