#pragma once

#include "starpoly/poly.hpp"

#include <cstdint>
#include <random>

namespace starpoly {

/// Deterministic generator of small random polynomials. Draws straight from
/// the engine (no std distributions) so a seed gives the same stream on
/// every standard library.
class PolySampler {
 public:
  explicit PolySampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

  /// Nonzero rational with |numerator| <= 9 and denominator in 1..4.
  Rat nonzero_rat();

  /// Up to max_terms terms of total degree <= max_degree; may be zero only if max_terms == 0.
  Poly poly(std::size_t n, unsigned max_degree, unsigned max_terms);
  /// Same, restricted to xi-only or z-only monomials.
  Poly xi_poly(std::size_t n, unsigned max_degree, unsigned max_terms);
  ZPoly z_poly(std::size_t n, unsigned max_degree, unsigned max_terms);

  MultiIndex index(std::size_t n, unsigned max_total);

 private:
  Poly draw(std::size_t n, unsigned max_degree, unsigned max_terms, bool use_xi, bool use_z);

  std::mt19937_64 rng_;
};

}  // namespace starpoly
