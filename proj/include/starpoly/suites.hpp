#pragma once

#include "starpoly/rational.hpp"
#include "starpoly/report.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace starpoly {

/// Index bounds shared by the verification suites.
struct SuiteBounds {
  unsigned degmax = 4;
  unsigned mmax = 8;
  unsigned kmax = 4;
  unsigned order = 8;
  /// Deformation parameters for the oracle scan.
  std::vector<Rat> ts{Rat(0), Rat(1), Rat(-1), Rat(2, 3)};
};

/// ortho, recur, ode, genfun, starexp, even, interchange, oracles.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws std::invalid_argument for an unknown name.
CheckReport run_suite(std::string_view name, const SuiteBounds& bounds);

}  // namespace starpoly
