#pragma once

#include "starpoly/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace starpoly {

/// Thrown when values of different dimension n meet in one operation, or an
/// index / exponent vector has the wrong length.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector in N^n. Componentwise subtraction is checked.
class MultiIndex {
 public:
  using value_type = std::uint32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}
  MultiIndex(std::initializer_list<value_type> entries) : e_(entries) {}
  explicit MultiIndex(std::vector<value_type> entries) : e_(std::move(entries)) {}

  /// e_i of length n.
  static MultiIndex unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  /// |alpha|
  std::uint64_t total() const noexcept;
  bool is_zero() const noexcept;

  /// Componentwise <=.
  bool fits_under(const MultiIndex& bound) const;

  MultiIndex operator+(const MultiIndex& other) const;
  /// Throws std::domain_error if any component would go negative.
  MultiIndex operator-(const MultiIndex& other) const;

  std::vector<value_type> const& entries() const noexcept { return e_; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<value_type> e_;
};

/// alpha! = prod alpha_i!
Int factorial(const MultiIndex& alpha);

/// C(beta, gamma) = prod C(beta_i, gamma_i)
Int binomial(const MultiIndex& beta, const MultiIndex& gamma);

/// "2" for n = 1, "(1,0)" otherwise.
std::string to_string(const MultiIndex& alpha);

/// Visits every gamma with gamma <= bound componentwise, in lexicographic order.
void for_each_under(const MultiIndex& bound, const std::function<void(const MultiIndex&)>& visit);

/// All alpha in N^n with |alpha| <= max_total, ordered by total then lexicographically.
std::vector<MultiIndex> indices_up_to(std::size_t n, std::uint64_t max_total);

}  // namespace starpoly
