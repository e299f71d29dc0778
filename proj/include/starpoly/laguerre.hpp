#pragma once

#include "starpoly/poly.hpp"
#include "starpoly/report.hpp"

#include <span>
#include <vector>

namespace starpoly {

/// Truncated power series sum_{m<=N} c_m(z) u^m in one formal variable u,
/// with polynomial coefficients. Arithmetic drops every u^m with m > N.
class USeries {
 public:
  USeries(std::size_t n, unsigned order);

  static USeries constant(const ZPoly& c, unsigned order);
  /// u / (1 - u) = u + u^2 + ... truncated.
  static USeries u_over_one_minus_u(std::size_t n, unsigned order);
  /// (1 - u)^{-(k+1)} = sum_m C(m+k, k) u^m truncated.
  static USeries inverse_one_minus_u_power(std::size_t n, unsigned order, unsigned k);

  unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  std::size_t dim() const noexcept { return n_; }
  const ZPoly& operator[](unsigned m) const { return coeffs_.at(m); }
  void set(unsigned m, ZPoly c);

  /// exp of a series with zero constant term, by truncated Horner evaluation
  /// 1 + s(1 + s/2(1 + s/3(...))).
  USeries exp() const;

  friend USeries operator+(const USeries& a, const USeries& b);
  friend USeries operator*(const USeries& a, const USeries& b);
  /// Multiplies every coefficient by the polynomial c.
  friend USeries operator*(const ZPoly& c, const USeries& a);
  friend bool operator==(const USeries&, const USeries&) = default;

 private:
  std::size_t n_;
  std::vector<ZPoly> coeffs_;
};

/// (alpha, k) indexing L_alpha^{[k]}(z).
struct LaguerreSpec {
  MultiIndex alpha;
  MultiIndex k;

  LaguerreSpec(MultiIndex alpha, MultiIndex k);
  std::size_t dim() const noexcept { return alpha.size(); }
};

/// L_m^{[k]}(z) = sum_{j=0}^m C(m+k, m-j) (-z)^j / j! in one variable.
/// Throws std::domain_error for negative m or k.
ZPoly laguerre1(int m, int k);
/// Same polynomial written in the variable z_var of an n-dimensional ring.
ZPoly laguerre1(int m, int k, std::size_t n, std::size_t var);

/// prod_i L_{alpha_i}^{[k_i]}(z_i).
ZPoly laguerre(const LaguerreSpec& spec);

/// L_alpha^{[k]}(xi z) = (-1)^{|alpha|}/alpha! xi^{-k} (xi^{alpha+k} * z^alpha)
/// with * the t = 1 product. The division by xi^k is exact; a remainder is
/// reported as std::logic_error.
Poly laguerre_star(const LaguerreSpec& spec);
/// The mirrored form (-1)^{|alpha|}/alpha! z^{-k} (xi^alpha * z^{alpha+k}).
Poly laguerre_star_z(const LaguerreSpec& spec);
/// laguerre_star evaluated at xi = (1,...,1).
ZPoly laguerre_from_star_at_one(const LaguerreSpec& spec);

/// exp(-z u/(1-u)) / (1-u)^{k+1} to order N, in variable z_var of dimension n.
USeries laguerre_generating_series(unsigned k, unsigned order, std::size_t n = 1, std::size_t var = 0);
/// Coefficient of u^alpha in prod_i exp(-z_i u_i/(1-u_i)) / (1-u_i)^{k_i+1}.
ZPoly laguerre_from_generating(const LaguerreSpec& spec);

/// integral_0^inf z^j e^{-z} dz = j!. Throws std::domain_error for j < 0.
Int gamma_moment(int j);

/// integral over the positive orthant of p(z) z^k e^{-sum z}, termwise through moments.
Rat integrate_weight(const ZPoly& p, const MultiIndex& k);

/// integral of p(xi_point, z) e^{-<xi,z>} prod xi_i over the positive orthant,
/// using integral_0^inf z^j e^{-c z} dz = j!/c^{j+1}. Every xi_point entry
/// must be positive.
Rat integrate_weight_xi(const Poly& p, std::span<const Rat> xi_point);

/// Coefficient m of the generating series equals laguerre1(m, k) for m <= N.
CheckReport generating_check(unsigned k, unsigned order);

/// L_m^{[k]} = (-1)^k d^k L_{m+k}.
bool identity_dk_check(unsigned m, unsigned k);

/// (m+1)L_{m+1} = (2m+1-z)L_m - m L_{m-1} and z L_m' = m(L_m - L_{m-1}), 1 <= m <= mmax.
CheckReport recurrence_check(unsigned mmax);

/// z f'' + (k+1-z) f' + m f = 0 for f = L_m^{[k]}, m <= mmax, k <= kmax.
CheckReport ode_check(unsigned mmax, unsigned kmax);

/// sum_{|alpha|<=N} L_alpha^{[k]}(xi z) u^alpha, built from laguerre_star,
/// against prod_i exp(-xi_i z_i u_i/(1-u_i)) / (1-u_i)^{k_i+1} truncated.
CheckReport star_exp_check(const MultiIndex& k, unsigned order);

/// xi^beta (xi^alpha * z^{alpha+beta}) = z^beta (xi^{alpha+beta} * z^alpha), t = 1.
bool even_identity_check(const MultiIndex& alpha, const MultiIndex& beta);

}  // namespace starpoly
