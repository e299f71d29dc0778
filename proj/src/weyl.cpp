#include "starpoly/weyl.hpp"

#include <string>

namespace starpoly {

namespace {

void require_same(const WeylOp& a, const WeylOp& b) {
  if (a.dim() != b.dim())
    throw DimensionError("operator dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

/// d_i o op, using d_i o c(z) = c(z) d_i + (d_i c)(z) on each term.
WeylOp left_partial(const WeylOp& op, std::size_t i) {
  WeylOp out(op.dim());
  const MultiIndex step = MultiIndex::unit(op.dim(), i);
  for (const auto& [alpha, c] : op.terms()) {
    out.add_term(alpha + step, c);
    out.add_term(alpha, d_z(c, i));
  }
  return out;
}

/// c(z) o op.
WeylOp left_multiply(const ZPoly& c, const WeylOp& op) {
  WeylOp out(op.dim());
  for (const auto& [alpha, a] : op.terms()) out.add_term(alpha, c * a);
  return out;
}

}  // namespace

WeylOp::WeylOp(std::size_t n) : n_(n) {
  if (n == 0) throw DimensionError("operator dimension must be at least 1");
}

WeylOp WeylOp::identity(std::size_t n) { return multiplication(ZPoly::constant(n, 1)); }

WeylOp WeylOp::partial(std::size_t n, std::size_t i) { return partial_power(MultiIndex::unit(n, i)); }

WeylOp WeylOp::partial_power(const MultiIndex& alpha) {
  WeylOp op(alpha.size());
  op.add_term(alpha, ZPoly::constant(alpha.size(), 1));
  return op;
}

WeylOp WeylOp::multiplication(const ZPoly& p) {
  WeylOp op(p.dim());
  op.add_term(MultiIndex(p.dim()), p);
  return op;
}

void WeylOp::add_term(const MultiIndex& alpha, const ZPoly& c) {
  if (alpha.size() != n_ || c.dim() != n_) throw DimensionError("operator term has wrong dimension");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

WeylOp& WeylOp::operator+=(const WeylOp& other) {
  require_same(*this, other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& other) {
  require_same(*this, other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
  return *this;
}

WeylOp operator-(const WeylOp& a) { return Rat(-1) * a; }

WeylOp operator*(const Rat& c, const WeylOp& a) {
  WeylOp out(a.n_);
  for (const auto& [alpha, p] : a.terms_) out.add_term(alpha, c * p);
  return out;
}

ZPoly weyl_apply(const WeylOp& op, const ZPoly& p) {
  if (op.dim() != p.dim()) throw DimensionError("operator and polynomial dimensions differ");
  ZPoly out(op.dim());
  for (const auto& [alpha, a] : op.terms()) out = out + a * d_multi(p, alpha);
  return out;
}

WeylOp weyl_compose(const WeylOp& first, const WeylOp& second) {
  require_same(first, second);
  WeylOp out(first.dim());
  for (const auto& [alpha, a] : first.terms()) {
    WeylOp moved = second;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (unsigned j = 0; j < alpha[i]; ++j) moved = left_partial(moved, i);
    out += left_multiply(a, moved);
  }
  return out;
}

WeylOp weyl_pow(const WeylOp& op, unsigned m) {
  WeylOp out = WeylOp::identity(op.dim());
  for (unsigned j = 0; j < m; ++j) out = weyl_compose(out, op);
  return out;
}

Poly right_symbol(const WeylOp& op) {
  Poly out(op.dim());
  for (const auto& [alpha, a] : op.terms())
    for (const auto& [m, c] : a.poly().terms()) out.add_term(Monomial{alpha, m.z}, c);
  return out;
}

WeylOp from_right_symbol(const Poly& symbol) {
  std::map<MultiIndex, Poly> by_alpha;
  const MultiIndex zero(symbol.dim());
  for (const auto& [m, c] : symbol.terms())
    by_alpha.try_emplace(m.xi, symbol.dim()).first->second.add_term(Monomial{zero, m.z}, c);
  WeylOp op(symbol.dim());
  for (auto& [alpha, p] : by_alpha) op.add_term(alpha, ZPoly(std::move(p)));
  return op;
}

Poly left_symbol(const WeylOp& op) { return phi(StarContext(op.dim(), Rat(-1)), right_symbol(op)); }

WeylOp from_left_symbol(const Poly& symbol) {
  const WeylOp right_form = from_right_symbol(symbol);
  WeylOp out(symbol.dim());
  for (const auto& [beta, b] : right_form.terms())
    out += weyl_compose(WeylOp::partial_power(beta), WeylOp::multiplication(b));
  return out;
}

}  // namespace starpoly
