#pragma once

#include "starpoly/rational.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace starpoly {

/// Malformed expression text. Carries the 1-based line and column of the
/// offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Variable families of the surface syntax: x1..xn (xi), z1..zn, d1..dn (d/dz).
enum class VarFamily { Xi, Z, Partial };

struct ExprNode {
  enum class Kind { Number, Variable, Negate, Sum, Product, Power, Group };

  Kind kind;
  int line = 1;
  int column = 1;
  Rat value;                      // Number
  VarFamily family{};             // Variable
  std::size_t index = 0;          // Variable, 0-based
  unsigned exponent = 0;          // Power
  std::vector<bool> subtract;     // Sum: true where the child is subtracted
  std::vector<std::unique_ptr<ExprNode>> children;
};

using ExprPtr = std::unique_ptr<ExprNode>;

struct ParseOptions {
  std::size_t n = 1;
  /// Admit d1..dn / D1..Dn.
  bool allow_partials = false;
};

/// Grammar, lowest precedence first:
///
///   sum     := product (('+' | '-') product)*
///   product := unary ('*' unary)*
///   unary   := '-' unary | '+' unary | power
///   power   := atom ('^' INTEGER)?
///   atom    := INTEGER ['/' INTEGER] | VARIABLE | '(' sum ')'
///
/// Juxtaposition is not multiplication; '/' may only appear inside a
/// numeric literal such as 3/4. Whitespace is ignored.
ExprPtr parse_expression(std::string_view text, const ParseOptions& options);

}  // namespace starpoly
