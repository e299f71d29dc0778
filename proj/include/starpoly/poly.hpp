#pragma once

#include "starpoly/multi_index.hpp"
#include "starpoly/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace starpoly {

/// Exponent pair (xi^a, z^b) of one term.
struct Monomial {
  MultiIndex xi;
  MultiIndex z;

  std::uint64_t total() const noexcept { return xi.total() + z.total(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Descending graded-lexicographic order on the concatenated exponent
/// (xi_1..xi_n, z_1..z_n): higher total degree first, ties broken by the
/// lexicographically larger exponent.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Total, xi- and z-degree. All three are -1 for the zero polynomial.
struct Degree {
  int total = -1;
  int xi = -1;
  int z = -1;

  friend bool operator==(const Degree&, const Degree&) = default;
};

/// Sparse polynomial in xi_1..xi_n, z_1..z_n over Q.
///
/// No stored coefficient is ever zero and the zero polynomial is the empty
/// map, so structural equality is mathematical equality. Iteration visits
/// terms leading term first.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexDescending>;

  explicit Poly(std::size_t n);

  static Poly constant(std::size_t n, const Rat& c);
  static Poly term(const MultiIndex& xi, const MultiIndex& z, const Rat& c = Rat(1));
  /// xi_i, 0-based.
  static Poly xi(std::size_t n, std::size_t i);
  /// z_i, 0-based.
  static Poly z(std::size_t n, std::size_t i);
  static Poly xi_power(const MultiIndex& alpha);
  static Poly z_power(const MultiIndex& beta);

  std::size_t dim() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rat coefficient(const Monomial& m) const;

  /// Accumulates c into the coefficient of m, pruning a resulting zero.
  void add_term(const Monomial& m, const Rat& c);

  Degree degree() const;
  /// True when every term has zero xi-exponent.
  bool is_z_only() const;
  /// True when every term has zero z-exponent.
  bool is_xi_only() const;

  /// Homogeneous component of total degree d.
  Poly homogeneous_part(std::uint64_t d) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  void check_same_dim(const Poly& other) const;

  std::size_t n_;
  TermMap terms_;
};

/// Polynomial in z only. Constructing one from a Poly with any xi-dependence throws.
class ZPoly {
 public:
  explicit ZPoly(std::size_t n) : p_(n) {}
  explicit ZPoly(Poly p);

  static ZPoly constant(std::size_t n, const Rat& c) { return ZPoly(Poly::constant(n, c)); }

  const Poly& poly() const noexcept { return p_; }
  operator const Poly&() const noexcept { return p_; }
  std::size_t dim() const noexcept { return p_.dim(); }
  bool is_zero() const noexcept { return p_.is_zero(); }
  Degree degree() const { return p_.degree(); }

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b) { return ZPoly(a.p_ + b.p_); }
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b) { return ZPoly(a.p_ - b.p_); }
  friend ZPoly operator-(const ZPoly& a) { return ZPoly(-a.p_); }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) { return ZPoly(a.p_ * b.p_); }
  friend ZPoly operator*(const Rat& c, const ZPoly& a) { return ZPoly(c * a.p_); }
  friend bool operator==(const ZPoly& a, const ZPoly& b) = default;

 private:
  Poly p_;
};

/// Which family of variables a derivative acts on.
enum class Var { Xi, Z };

/// d/dz_i (i 0-based). Throws DimensionError when i >= n.
Poly d_z(const Poly& f, std::size_t i);
/// d/dxi_i (i 0-based). Throws DimensionError when i >= n.
Poly d_xi(const Poly& f, std::size_t i);
ZPoly d_z(const ZPoly& f, std::size_t i);

/// Iterated partials: d^gamma in the chosen family.
Poly d_multi(const Poly& f, Var kind, const MultiIndex& gamma);
ZPoly d_multi(const ZPoly& f, const MultiIndex& gamma);

/// Substitutes xi = xi_point, leaving a polynomial in z.
ZPoly eval_xi(const Poly& f, std::span<const Rat> xi_point);
/// Substitutes both families; the result is a number.
Rat eval(const Poly& f, std::span<const Rat> xi_point, std::span<const Rat> z_point);

/// f^m under ordinary multiplication.
Poly pow(const Poly& f, unsigned m);

/// Exact division by the monomial xi^a z^b; nullopt when some term is not divisible.
std::optional<Poly> divide_by_monomial(const Poly& f, const Monomial& m);

/// Maps each z_i to xi_i * z_i (so p(z) becomes p(xi z)).
Poly substitute_xi_z(const ZPoly& p);

}  // namespace starpoly
