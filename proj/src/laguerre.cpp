#include "starpoly/laguerre.hpp"

#include "starpoly/deformation.hpp"

#include <stdexcept>
#include <string>

namespace starpoly {

// ---------------------------------------------------------------- USeries

USeries::USeries(std::size_t n, unsigned order) : n_(n), coeffs_(order + 1, ZPoly(n)) {}

USeries USeries::constant(const ZPoly& c, unsigned order) {
  USeries s(c.dim(), order);
  s.coeffs_[0] = c;
  return s;
}

USeries USeries::u_over_one_minus_u(std::size_t n, unsigned order) {
  USeries s(n, order);
  for (unsigned m = 1; m <= order; ++m) s.coeffs_[m] = ZPoly::constant(n, 1);
  return s;
}

USeries USeries::inverse_one_minus_u_power(std::size_t n, unsigned order, unsigned k) {
  USeries s(n, order);
  for (unsigned m = 0; m <= order; ++m) s.coeffs_[m] = ZPoly::constant(n, Rat(binomial(m + k, k)));
  return s;
}

void USeries::set(unsigned m, ZPoly c) {
  if (c.dim() != n_) throw DimensionError("series coefficient has wrong dimension");
  coeffs_.at(m) = std::move(c);
}

USeries USeries::exp() const {
  if (!coeffs_[0].is_zero()) throw std::domain_error("USeries::exp needs a zero constant term");
  const unsigned N = order();
  const USeries one = constant(ZPoly::constant(n_, 1), N);
  USeries acc = one;
  for (unsigned j = N; j >= 1; --j) {
    USeries step = (*this) * acc;
    for (auto& c : step.coeffs_) c = ratio(1, j) * c;
    acc = one + step;
  }
  return acc;
}

USeries operator+(const USeries& a, const USeries& b) {
  if (a.n_ != b.n_ || a.order() != b.order()) throw DimensionError("series shape mismatch");
  USeries out(a.n_, a.order());
  for (unsigned m = 0; m <= a.order(); ++m) out.coeffs_[m] = a.coeffs_[m] + b.coeffs_[m];
  return out;
}

USeries operator*(const USeries& a, const USeries& b) {
  if (a.n_ != b.n_ || a.order() != b.order()) throw DimensionError("series shape mismatch");
  const unsigned N = a.order();
  USeries out(a.n_, N);
  for (unsigned i = 0; i <= N; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= N; ++j) out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

USeries operator*(const ZPoly& c, const USeries& a) {
  USeries out(a.n_, a.order());
  for (unsigned m = 0; m <= a.order(); ++m) out.coeffs_[m] = c * a.coeffs_[m];
  return out;
}

// ------------------------------------------------------------- polynomials

LaguerreSpec::LaguerreSpec(MultiIndex alpha, MultiIndex k) : alpha(std::move(alpha)), k(std::move(k)) {
  if (this->alpha.size() != this->k.size()) throw DimensionError("Laguerre alpha and k differ in length");
  if (this->alpha.size() == 0) throw DimensionError("Laguerre index needs n >= 1");
}

ZPoly laguerre1(int m, int k) { return laguerre1(m, k, 1, 0); }

ZPoly laguerre1(int m, int k, std::size_t n, std::size_t var) {
  if (m < 0 || k < 0) throw std::domain_error("Laguerre indices must be non-negative");
  if (var >= n) throw DimensionError("Laguerre variable index out of range");
  Poly out(n);
  const MultiIndex zero(n);
  for (int j = 0; j <= m; ++j) {
    MultiIndex z(n);
    z[var] = static_cast<MultiIndex::value_type>(j);
    Rat c = ratio(binomial(static_cast<unsigned>(m + k), static_cast<unsigned>(m - j)), factorial(j));
    if (j % 2) c = -c;
    out.add_term(Monomial{zero, z}, c);
  }
  return ZPoly(std::move(out));
}

ZPoly laguerre(const LaguerreSpec& spec) {
  const std::size_t n = spec.dim();
  ZPoly out = ZPoly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    out = out * laguerre1(static_cast<int>(spec.alpha[i]), static_cast<int>(spec.k[i]), n, i);
  return out;
}

namespace {

Rat sign_over_factorial(const MultiIndex& alpha) {
  Rat c = ratio(1, factorial(alpha));
  return alpha.total() % 2 ? Rat(-c) : c;
}

}  // namespace

Poly laguerre_star(const LaguerreSpec& spec) {
  const std::size_t n = spec.dim();
  const StarContext ctx(n, 1);
  const Poly raw = star_monomial(ctx, spec.alpha + spec.k, spec.alpha) * sign_over_factorial(spec.alpha);
  auto divided = divide_by_monomial(raw, Monomial{spec.k, MultiIndex(n)});
  if (!divided) throw std::logic_error("laguerre_star: xi^k does not divide the star monomial");
  return *divided;
}

Poly laguerre_star_z(const LaguerreSpec& spec) {
  const std::size_t n = spec.dim();
  const StarContext ctx(n, 1);
  const Poly raw = star_monomial(ctx, spec.alpha, spec.alpha + spec.k) * sign_over_factorial(spec.alpha);
  auto divided = divide_by_monomial(raw, Monomial{MultiIndex(n), spec.k});
  if (!divided) throw std::logic_error("laguerre_star_z: z^k does not divide the star monomial");
  return *divided;
}

ZPoly laguerre_from_star_at_one(const LaguerreSpec& spec) {
  const std::vector<Rat> ones(spec.dim(), Rat(1));
  return eval_xi(laguerre_star(spec), ones);
}

USeries laguerre_generating_series(unsigned k, unsigned order, std::size_t n, std::size_t var) {
  const ZPoly minus_z(-Poly::z(n, var));
  const USeries exponent = minus_z * USeries::u_over_one_minus_u(n, order);
  return exponent.exp() * USeries::inverse_one_minus_u_power(n, order, k);
}

ZPoly laguerre_from_generating(const LaguerreSpec& spec) {
  const std::size_t n = spec.dim();
  ZPoly out = ZPoly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i) out = out * laguerre_generating_series(spec.k[i], spec.alpha[i], n, i)[spec.alpha[i]];
  return out;
}

// ---------------------------------------------------------------- moments

Int gamma_moment(int j) {
  if (j < 0) throw std::domain_error("gamma_moment: negative order");
  return factorial(static_cast<unsigned>(j));
}

Rat integrate_weight(const ZPoly& p, const MultiIndex& k) {
  if (k.size() != p.dim()) throw DimensionError("weight exponent has wrong length");
  Rat total = 0;
  for (const auto& [m, c] : p.poly().terms()) {
    Int moment = 1;
    for (std::size_t i = 0; i < k.size(); ++i) moment *= gamma_moment(static_cast<int>(m.z[i] + k[i]));
    total += c * moment;
  }
  return total;
}

Rat integrate_weight_xi(const Poly& p, std::span<const Rat> xi_point) {
  if (xi_point.size() != p.dim()) throw DimensionError("xi point has wrong length");
  for (const auto& x : xi_point)
    if (x <= 0) throw std::domain_error("integrate_weight_xi: xi entries must be positive");
  Rat total = 0;
  const ZPoly at_point = eval_xi(p, xi_point);
  for (const auto& [m, c] : at_point.poly().terms()) {
    // j!/c^{j+1} per coordinate, times the normalising factor c.
    Rat v = c;
    for (std::size_t i = 0; i < m.z.size(); ++i) v *= Rat(gamma_moment(static_cast<int>(m.z[i]))) / pow(xi_point[i], m.z[i]);
    total += v;
  }
  return total;
}

// ------------------------------------------------------------------ checks

CheckReport generating_check(unsigned k, unsigned order) {
  CheckReport report("genfun");
  const USeries series = laguerre_generating_series(k, order);
  for (unsigned m = 0; m <= order; ++m) {
    const bool ok = series[m] == laguerre1(static_cast<int>(m), static_cast<int>(k));
    report.record("k=" + std::to_string(k) + " m=" + std::to_string(m), ok,
                  ok ? "" : "generating coefficient differs from explicit sum");
  }
  return report;
}

bool identity_dk_check(unsigned m, unsigned k) {
  ZPoly rhs = d_multi(laguerre1(static_cast<int>(m + k), 0), MultiIndex{k});
  if (k % 2) rhs = -rhs;
  return laguerre1(static_cast<int>(m), static_cast<int>(k)) == rhs;
}

CheckReport recurrence_check(unsigned mmax) {
  if (mmax < 1) throw std::domain_error("recurrence_check needs mmax >= 1");
  CheckReport report("recur");
  const ZPoly z(Poly::z(1, 0));
  auto L = [](unsigned m) { return laguerre1(static_cast<int>(m), 0); };
  for (unsigned m = 1; m <= mmax; ++m) {
    const Rat mr(m);
    const ZPoly three_term = Rat(m + 1) * L(m + 1) - ((ZPoly::constant(1, Rat(2 * m + 1)) - z) * L(m) - mr * L(m - 1));
    report.record("three-term m=" + std::to_string(m), three_term.is_zero());
    const ZPoly derivative = z * d_z(L(m), 0) - mr * (L(m) - L(m - 1));
    report.record("derivative m=" + std::to_string(m), derivative.is_zero());
  }
  return report;
}

CheckReport ode_check(unsigned mmax, unsigned kmax) {
  CheckReport report("ode");
  const ZPoly z(Poly::z(1, 0));
  for (unsigned k = 0; k <= kmax; ++k) {
    for (unsigned m = 0; m <= mmax; ++m) {
      const ZPoly f = laguerre1(static_cast<int>(m), static_cast<int>(k));
      const ZPoly f1 = d_z(f, 0);
      const ZPoly residual = z * d_z(f1, 0) + (ZPoly::constant(1, Rat(k + 1)) - z) * f1 + Rat(m) * f;
      report.record("m=" + std::to_string(m) + " k=" + std::to_string(k), residual.is_zero());
    }
  }
  return report;
}

CheckReport star_exp_check(const MultiIndex& k, unsigned order) {
  const std::size_t n = k.size();
  CheckReport report("starexp");
  std::vector<USeries> per_coordinate;
  for (std::size_t i = 0; i < n; ++i) per_coordinate.push_back(laguerre_generating_series(k[i], order, n, i));
  for (const auto& alpha : indices_up_to(n, order)) {
    Poly rhs = Poly::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i) rhs = rhs * substitute_xi_z(per_coordinate[i][alpha[i]]);
    const Poly lhs = laguerre_star(LaguerreSpec(alpha, k));
    report.record("alpha=" + to_string(alpha) + " k=" + to_string(k), lhs == rhs);
  }
  return report;
}

bool even_identity_check(const MultiIndex& alpha, const MultiIndex& beta) {
  const StarContext ctx(alpha.size(), 1);
  const Poly lhs = Poly::xi_power(beta) * star_monomial(ctx, alpha, alpha + beta);
  const Poly rhs = Poly::z_power(beta) * star_monomial(ctx, alpha + beta, alpha);
  return lhs == rhs;
}

}  // namespace starpoly
