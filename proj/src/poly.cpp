#include "starpoly/poly.hpp"

#include <algorithm>
#include <string>

namespace starpoly {

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const auto ta = a.total();
  const auto tb = b.total();
  if (ta != tb) return ta > tb;
  if (a.xi != b.xi) return a.xi > b.xi;
  return a.z > b.z;
}

Poly::Poly(std::size_t n) : n_(n) {
  if (n == 0) throw DimensionError("polynomial dimension must be at least 1");
}

Poly Poly::constant(std::size_t n, const Rat& c) {
  Poly p(n);
  p.add_term(Monomial{MultiIndex(n), MultiIndex(n)}, c);
  return p;
}

Poly Poly::term(const MultiIndex& xi, const MultiIndex& z, const Rat& c) {
  if (xi.size() != z.size()) throw DimensionError("xi and z exponents differ in length");
  Poly p(xi.size());
  p.add_term(Monomial{xi, z}, c);
  return p;
}

Poly Poly::xi(std::size_t n, std::size_t i) { return term(MultiIndex::unit(n, i), MultiIndex(n)); }

Poly Poly::z(std::size_t n, std::size_t i) { return term(MultiIndex(n), MultiIndex::unit(n, i)); }

Poly Poly::xi_power(const MultiIndex& alpha) { return term(alpha, MultiIndex(alpha.size())); }

Poly Poly::z_power(const MultiIndex& beta) { return term(MultiIndex(beta.size()), beta); }

Rat Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (m.xi.size() != n_ || m.z.size() != n_)
    throw DimensionError("monomial of length " + std::to_string(m.xi.size()) + "/" + std::to_string(m.z.size()) +
                         " in a polynomial of dimension " + std::to_string(n_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Degree Poly::degree() const {
  Degree d;
  for (const auto& [m, c] : terms_) {
    d.total = std::max<int>(d.total, static_cast<int>(m.total()));
    d.xi = std::max<int>(d.xi, static_cast<int>(m.xi.total()));
    d.z = std::max<int>(d.z, static_cast<int>(m.z.total()));
  }
  return d;
}

bool Poly::is_z_only() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.xi.is_zero(); });
}

bool Poly::is_xi_only() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.z.is_zero(); });
}

Poly Poly::homogeneous_part(std::uint64_t d) const {
  Poly out(n_);
  for (const auto& [m, c] : terms_)
    if (m.total() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

void Poly::check_same_dim(const Poly& other) const {
  if (other.n_ != n_)
    throw DimensionError("dimension mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
}

Poly& Poly::operator+=(const Poly& other) {
  check_same_dim(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_same_dim(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_dim(b);
  Poly out(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(Monomial{ma.xi + mb.xi, ma.z + mb.z}, ca * cb);
  return out;
}

ZPoly::ZPoly(Poly p) : p_(std::move(p)) {
  if (!p_.is_z_only()) throw std::invalid_argument("expected a polynomial in z only");
}

namespace {

Poly derivative(const Poly& f, Var kind, std::size_t i, unsigned order) {
  if (i >= f.dim())
    throw DimensionError("derivative index " + std::to_string(i + 1) + " out of range for n = " +
                         std::to_string(f.dim()));
  Poly out(f.dim());
  if (order == 0) return f;
  for (const auto& [m, c] : f.terms()) {
    const unsigned e = kind == Var::Xi ? m.xi[i] : m.z[i];
    if (e < order) continue;
    Monomial dm = m;
    (kind == Var::Xi ? dm.xi : dm.z)[i] = e - order;
    out.add_term(dm, c * Rat(falling_factorial(e, order)));
  }
  return out;
}

}  // namespace

Poly d_z(const Poly& f, std::size_t i) { return derivative(f, Var::Z, i, 1); }

Poly d_xi(const Poly& f, std::size_t i) { return derivative(f, Var::Xi, i, 1); }

ZPoly d_z(const ZPoly& f, std::size_t i) { return ZPoly(d_z(f.poly(), i)); }

Poly d_multi(const Poly& f, Var kind, const MultiIndex& gamma) {
  if (gamma.size() != f.dim()) throw DimensionError("derivative multi-index has wrong length");
  Poly out = f;
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (gamma[i]) out = derivative(out, kind, i, gamma[i]);
  return out;
}

ZPoly d_multi(const ZPoly& f, const MultiIndex& gamma) { return ZPoly(d_multi(f.poly(), Var::Z, gamma)); }

ZPoly eval_xi(const Poly& f, std::span<const Rat> xi_point) {
  if (xi_point.size() != f.dim()) throw DimensionError("xi point has wrong length");
  Poly out(f.dim());
  for (const auto& [m, c] : f.terms()) {
    Rat v = c;
    for (std::size_t i = 0; i < m.xi.size() && v != 0; ++i) v *= pow(xi_point[i], m.xi[i]);
    out.add_term(Monomial{MultiIndex(f.dim()), m.z}, v);
  }
  return ZPoly(std::move(out));
}

Rat eval(const Poly& f, std::span<const Rat> xi_point, std::span<const Rat> z_point) {
  if (z_point.size() != f.dim()) throw DimensionError("z point has wrong length");
  Rat total = 0;
  const ZPoly at_point = eval_xi(f, xi_point);
  for (const auto& [m, c] : at_point.poly().terms()) {
    Rat v = c;
    for (std::size_t i = 0; i < m.z.size(); ++i) v *= pow(z_point[i], m.z[i]);
    total += v;
  }
  return total;
}

Poly pow(const Poly& f, unsigned m) {
  Poly out = Poly::constant(f.dim(), 1);
  for (unsigned j = 0; j < m; ++j) out = out * f;
  return out;
}

std::optional<Poly> divide_by_monomial(const Poly& f, const Monomial& m) {
  Poly out(f.dim());
  for (const auto& [t, c] : f.terms()) {
    if (!m.xi.fits_under(t.xi) || !m.z.fits_under(t.z)) return std::nullopt;
    out.add_term(Monomial{t.xi - m.xi, t.z - m.z}, c);
  }
  return out;
}

Poly substitute_xi_z(const ZPoly& p) {
  Poly out(p.dim());
  for (const auto& [m, c] : p.poly().terms()) out.add_term(Monomial{m.z, m.z}, c);
  return out;
}

}  // namespace starpoly
