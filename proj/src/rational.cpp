#include "starpoly/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace starpoly {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rat r(negative ? Int(-n) : n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& value) { return value.get_str(10); }

std::string to_string(const Int& value) { return value.get_str(10); }

const Int& factorial(unsigned n) {
  thread_local std::vector<Int> table{Int(1)};
  while (table.size() <= n) table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  return table[n];
}

Int falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int out = 1;
  for (unsigned j = 0; j < k; ++j) out *= static_cast<unsigned long>(n - j);
  return out;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rat pow(const Rat& base, unsigned exponent) {
  Rat out(1);
  Rat b = base;
  while (exponent) {
    if (exponent & 1u) out *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return out;
}

Rat ratio(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace starpoly
