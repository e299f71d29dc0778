#include "starpoly/sampling.hpp"

namespace starpoly {

Rat PolySampler::nonzero_rat() {
  const long num = static_cast<long>(below(9)) + 1;
  const long den = static_cast<long>(below(4)) + 1;
  Rat r(below(2) ? -num : num, den);
  r.canonicalize();
  return r;
}

MultiIndex PolySampler::index(std::size_t n, unsigned max_total) {
  MultiIndex a(n);
  unsigned budget = static_cast<unsigned>(below(max_total + 1));
  for (std::size_t i = 0; i < n && budget; ++i) {
    const auto e = i + 1 == n ? budget : static_cast<unsigned>(below(budget + 1));
    a[i] = e;
    budget -= e;
  }
  return a;
}

Poly PolySampler::draw(std::size_t n, unsigned max_degree, unsigned max_terms, bool use_xi, bool use_z) {
  Poly p(n);
  const unsigned terms = max_terms == 0 ? 0 : static_cast<unsigned>(below(max_terms)) + 1;
  for (unsigned j = 0; j < terms; ++j) {
    const unsigned deg = static_cast<unsigned>(below(max_degree + 1));
    MultiIndex xi(n), z(n);
    if (use_xi && use_z) {
      MultiIndex both = index(2 * n, deg);
      for (std::size_t i = 0; i < n; ++i) {
        xi[i] = both[i];
        z[i] = both[n + i];
      }
    } else if (use_xi) {
      xi = index(n, deg);
    } else {
      z = index(n, deg);
    }
    p.add_term(Monomial{xi, z}, nonzero_rat());
  }
  if (p.is_zero() && terms > 0) p.add_term(Monomial{MultiIndex(n), MultiIndex(n)}, 1);
  return p;
}

Poly PolySampler::poly(std::size_t n, unsigned max_degree, unsigned max_terms) {
  return draw(n, max_degree, max_terms, true, true);
}

Poly PolySampler::xi_poly(std::size_t n, unsigned max_degree, unsigned max_terms) {
  return draw(n, max_degree, max_terms, true, false);
}

ZPoly PolySampler::z_poly(std::size_t n, unsigned max_degree, unsigned max_terms) {
  return ZPoly(draw(n, max_degree, max_terms, false, true));
}

}  // namespace starpoly
