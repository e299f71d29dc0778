#include "starpoly/exact_solve.hpp"

#include <stdexcept>

namespace starpoly {

std::optional<std::vector<Rat>> solve_exact(RatMatrix a, std::vector<Rat> b) {
  if (b.size() != a.rows) throw std::invalid_argument("solve_exact: right-hand side has wrong length");
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t best = a.rows;
    for (std::size_t r = row; r < a.rows; ++r) {
      if (a.at(r, col) == 0) continue;
      if (best == a.rows || abs(a.at(r, col)) > abs(a.at(best, col))) best = r;
    }
    if (best == a.rows) continue;
    if (best != row) {
      for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(best, c), a.at(row, c));
      std::swap(b[best], b[row]);
    }
    const Rat inv = 1 / a.at(row, col);
    for (std::size_t c = col; c < a.cols; ++c) a.at(row, c) *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      const Rat factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols; ++c) a.at(r, c) -= factor * a.at(row, c);
      b[r] -= factor * b[row];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < a.rows; ++r)
    if (b[r] != 0) return std::nullopt;
  std::vector<Rat> x(a.cols);
  for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) x[pivot_col_of_row[r]] = b[r];
  return x;
}

}  // namespace starpoly
