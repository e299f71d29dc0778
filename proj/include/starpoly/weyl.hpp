#pragma once

#include "starpoly/deformation.hpp"
#include "starpoly/poly.hpp"

#include <map>

namespace starpoly {

/// Differential operator of C[z] held in right normal form
///
///   sum_alpha a_alpha(z) d^alpha
///
/// (coefficients to the left of the derivatives). The form is unique, so
/// structural equality is operator equality.
class WeylOp {
 public:
  using TermMap = std::map<MultiIndex, ZPoly>;

  explicit WeylOp(std::size_t n);

  static WeylOp identity(std::size_t n);
  /// d/dz_i, 0-based.
  static WeylOp partial(std::size_t n, std::size_t i);
  static WeylOp partial_power(const MultiIndex& alpha);
  /// Multiplication by p(z).
  static WeylOp multiplication(const ZPoly& p);

  std::size_t dim() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c(z) d^alpha, pruning a zero coefficient.
  void add_term(const MultiIndex& alpha, const ZPoly& c);

  WeylOp& operator+=(const WeylOp& other);
  WeylOp& operator-=(const WeylOp& other);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator-(const WeylOp& a);
  friend WeylOp operator*(const Rat& c, const WeylOp& a);
  friend bool operator==(const WeylOp&, const WeylOp&) = default;

 private:
  std::size_t n_;
  TermMap terms_;
};

/// sum a_alpha(z) d^alpha p.
ZPoly weyl_apply(const WeylOp& op, const ZPoly& p);

/// first o second, renormalised to right normal form.
WeylOp weyl_compose(const WeylOp& first, const WeylOp& second);

/// first^m under composition.
WeylOp weyl_pow(const WeylOp& op, unsigned m);

/// Right total symbol sum a_alpha(z) xi^alpha.
Poly right_symbol(const WeylOp& op);
WeylOp from_right_symbol(const Poly& symbol);

/// Left total symbol sum b_beta(z) xi^beta of op = sum d^beta o b_beta(z),
/// obtained as Phi_{-1} of the right symbol.
Poly left_symbol(const WeylOp& op);
/// sum d^beta o b_beta(z), built by composition.
WeylOp from_left_symbol(const Poly& symbol);

}  // namespace starpoly
