#pragma once

#include "starpoly/deformation.hpp"
#include "starpoly/poly.hpp"
#include "starpoly/report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace starpoly {

/// p lies in Im(xi - t d) = xi *_t C[xi,z] exactly when E_t(p) = 0.
bool in_image_Et(const StarContext& ctx, const Poly& p);

/// Witnesses g_1..g_n with p = sum_i (xi_i - t d_i) g_i, found by an exact
/// linear solve over all g_i of total degree <= witness_degree. The default
/// bound is deg(p) - 1. nullopt when no witness of that degree exists.
std::optional<std::vector<Poly>> image_witness(const StarContext& ctx, const Poly& p,
                                               std::optional<int> witness_degree = std::nullopt);

/// Brute-force membership in Im(xi - t d) through image_witness.
bool in_image_linear(const StarContext& ctx, const Poly& p, std::optional<int> witness_degree = std::nullopt);

/// p lies in span{L_alpha^{[k]} : alpha != 0} exactly when its L_0 component,
/// the weighted integral of p, vanishes.
bool in_laguerre_span(const ZPoly& p, const MultiIndex& k);

enum class OracleKind { ImageEt, ImageLinear, LaguerreSpan };

/// A membership test with its parameters bound.
struct MembershipOracle {
  OracleKind kind;
  Rat t;
  MultiIndex k;

  static MembershipOracle image_Et(Rat t) { return {OracleKind::ImageEt, std::move(t), {}}; }
  static MembershipOracle image_linear(Rat t) { return {OracleKind::ImageLinear, std::move(t), {}}; }
  static MembershipOracle laguerre_span(MultiIndex k) { return {OracleKind::LaguerreSpan, 0, std::move(k)}; }

  bool is_image() const noexcept { return kind != OracleKind::LaguerreSpan; }
  bool contains(const Poly& p) const;
};

std::string to_string(OracleKind kind);

/// How powers of the candidate are formed.
struct PowerRule {
  enum class Kind { Star, Ordinary } kind;
  Rat t;

  static PowerRule star(Rat t) { return {Kind::Star, std::move(t)}; }
  static PowerRule ordinary() { return {Kind::Ordinary, 0}; }
};

struct PowerVerdict {
  unsigned m;
  bool power_member;    // f^m in M
  bool product_member;  // b f^m in M
  Poly power;
};

/// Evidence from one bounded run of the Mathieu tail condition. It never
/// decides whether the subspace is Mathieu; it records what happened for 1 <= m <= mmax.
struct ExperimentReport {
  MembershipOracle oracle;
  PowerRule rule;
  Poly f;
  Poly b;
  std::vector<PowerVerdict> verdicts;
  /// Least N with b f^m in M for every N <= m <= mmax.
  std::optional<unsigned> first_stable_N;

  bool all_powers_member() const;
};

class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds f^m (star or ordinary) for 1 <= m <= mmax and records membership of
/// f^m and b f^m, the product taken in the same algebra as the powers.
/// A star rule needs an image oracle. Throws DegreeCapExceeded as soon as
/// an intermediate total degree exceeds degree_cap.
ExperimentReport power_experiment(const MembershipOracle& oracle, const Poly& f, const Poly& b, unsigned mmax,
                                  const PowerRule& rule, int degree_cap = 40);

/// Compares in_image_Et with in_image_linear on every monomial of total
/// degree <= degmax and on random_samples random rational combinations.
CheckReport oracle_equivalence_scan(const Rat& t, std::size_t n, unsigned degmax, unsigned random_samples = 200,
                                    std::uint64_t seed = 0x5eedULL);

}  // namespace starpoly
