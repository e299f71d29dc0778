#pragma once

#include "starpoly/rational.hpp"

#include <optional>
#include <vector>

namespace starpoly {

/// Dense rational matrix, row-major.
struct RatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rat> data;

  RatMatrix(std::size_t rows, std::size_t cols) : rows(rows), cols(cols), data(rows * cols) {}
  Rat& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Solves A x = b exactly by Gaussian elimination. Pivots on the entry of
/// largest magnitude in the column, lowest row index on ties. Returns one
/// solution (free variables set to zero) or nullopt if the system is
/// inconsistent.
std::optional<std::vector<Rat>> solve_exact(RatMatrix a, std::vector<Rat> b);

}  // namespace starpoly
