#include "starpoly/multi_index.hpp"

#include <algorithm>

namespace starpoly {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionError("unit index " + std::to_string(i) + " out of range for n = " + std::to_string(n));
  MultiIndex out(n);
  out.e_[i] = 1;
  return out;
}

std::uint64_t MultiIndex::total() const noexcept {
  std::uint64_t s = 0;
  for (auto v : e_) s += v;
  return s;
}

bool MultiIndex::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](value_type v) { return v == 0; });
}

bool MultiIndex::fits_under(const MultiIndex& bound) const {
  if (bound.size() != size()) throw DimensionError("multi-index length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > bound.e_[i]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.size() != size()) throw DimensionError("multi-index length mismatch");
  MultiIndex out(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += other.e_[i];
  return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (other.size() != size()) throw DimensionError("multi-index length mismatch");
  MultiIndex out(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (other.e_[i] > e_[i]) throw std::domain_error("multi-index subtraction would go negative");
    out.e_[i] -= other.e_[i];
  }
  return out;
}

Int factorial(const MultiIndex& alpha) {
  Int out = 1;
  for (auto a : alpha) out *= factorial(a);
  return out;
}

Int binomial(const MultiIndex& beta, const MultiIndex& gamma) {
  if (beta.size() != gamma.size()) throw DimensionError("multi-index length mismatch");
  Int out = 1;
  for (std::size_t i = 0; i < beta.size(); ++i) out *= binomial(beta[i], gamma[i]);
  return out;
}

std::string to_string(const MultiIndex& alpha) {
  if (alpha.size() == 1) return std::to_string(alpha[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(alpha[i]);
  }
  return s + ")";
}

void for_each_under(const MultiIndex& bound, const std::function<void(const MultiIndex&)>& visit) {
  MultiIndex cur(bound.size());
  while (true) {
    visit(cur);
    std::size_t i = bound.size();
    while (i > 0) {
      --i;
      if (cur[i] < bound[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return;
    }
    if (bound.size() == 0) return;
  }
}

std::vector<MultiIndex> indices_up_to(std::size_t n, std::uint64_t max_total) {
  std::vector<MultiIndex> out;
  MultiIndex box(n);
  for (std::size_t i = 0; i < n; ++i) box[i] = static_cast<MultiIndex::value_type>(max_total);
  for_each_under(box, [&](const MultiIndex& a) {
    if (a.total() <= max_total) out.push_back(a);
  });
  std::stable_sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return a.total() < b.total();
  });
  return out;
}

}  // namespace starpoly
