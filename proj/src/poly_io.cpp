#include "starpoly/poly_io.hpp"

#include <sstream>

namespace starpoly {

namespace {

Poly to_poly(const ExprNode& e, std::size_t n) {
  switch (e.kind) {
    case ExprNode::Kind::Number:
      return Poly::constant(n, e.value);
    case ExprNode::Kind::Variable:
      return e.family == VarFamily::Xi ? Poly::xi(n, e.index) : Poly::z(n, e.index);
    case ExprNode::Kind::Negate:
      return -to_poly(*e.children[0], n);
    case ExprNode::Kind::Group:
      return to_poly(*e.children[0], n);
    case ExprNode::Kind::Sum: {
      Poly out(n);
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (e.subtract[i])
          out -= to_poly(*e.children[i], n);
        else
          out += to_poly(*e.children[i], n);
      }
      return out;
    }
    case ExprNode::Kind::Product: {
      Poly out = to_poly(*e.children[0], n);
      for (std::size_t i = 1; i < e.children.size(); ++i) out = out * to_poly(*e.children[i], n);
      return out;
    }
    case ExprNode::Kind::Power:
      return pow(to_poly(*e.children[0], n), e.exponent);
  }
  throw std::logic_error("unhandled expression node");
}

WeylOp to_weyl(const ExprNode& e, std::size_t n) {
  switch (e.kind) {
    case ExprNode::Kind::Number:
      return WeylOp::multiplication(ZPoly::constant(n, e.value));
    case ExprNode::Kind::Variable:
      if (e.family == VarFamily::Partial) return WeylOp::partial(n, e.index);
      if (e.family == VarFamily::Z) return WeylOp::multiplication(ZPoly(Poly::z(n, e.index)));
      throw ParseError("x variables are symbols, not operators; use d1..dn", e.line, e.column);
    case ExprNode::Kind::Negate:
      return -to_weyl(*e.children[0], n);
    case ExprNode::Kind::Group:
      return to_weyl(*e.children[0], n);
    case ExprNode::Kind::Sum: {
      WeylOp out(n);
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (e.subtract[i])
          out -= to_weyl(*e.children[i], n);
        else
          out += to_weyl(*e.children[i], n);
      }
      return out;
    }
    case ExprNode::Kind::Product: {
      WeylOp out = to_weyl(*e.children[0], n);
      for (std::size_t i = 1; i < e.children.size(); ++i) out = weyl_compose(out, to_weyl(*e.children[i], n));
      return out;
    }
    case ExprNode::Kind::Power:
      return weyl_pow(to_weyl(*e.children[0], n), e.exponent);
  }
  throw std::logic_error("unhandled expression node");
}

struct Style {
  const char* xi_name;
  bool z_first;
};

void put_factor(std::ostringstream& os, bool& first, const char* name, std::size_t i, unsigned e) {
  if (e == 0) return;
  if (!first) os << '*';
  first = false;
  os << name << (i + 1);
  if (e != 1) os << '^' << e;
}

std::string render(const Poly& p, const Style& style) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool leading = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (leading)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    leading = false;
    const Rat mag = abs(c);
    const bool constant = m.total() == 0;
    if (constant) {
      os << to_string(mag);
      continue;
    }
    bool first = true;
    if (mag != 1) {
      os << to_string(mag);
      first = false;
    }
    auto put_xi = [&] {
      for (std::size_t i = 0; i < m.xi.size(); ++i) put_factor(os, first, style.xi_name, i, m.xi[i]);
    };
    auto put_z = [&] {
      for (std::size_t i = 0; i < m.z.size(); ++i) put_factor(os, first, "z", i, m.z[i]);
    };
    if (style.z_first) {
      put_z();
      put_xi();
    } else {
      put_xi();
      put_z();
    }
  }
  return os.str();
}

}  // namespace

Poly parse_poly(std::string_view text, std::size_t n) {
  if (n == 0) throw DimensionError("parse_poly needs n >= 1");
  return to_poly(*parse_expression(text, ParseOptions{n, false}), n);
}

std::string print_poly(const Poly& p) { return render(p, Style{"x", false}); }

WeylOp parse_weyl(std::string_view text, std::size_t n) {
  if (n == 0) throw DimensionError("parse_weyl needs n >= 1");
  return to_weyl(*parse_expression(text, ParseOptions{n, true}), n);
}

std::string print_weyl(const WeylOp& op) { return render(right_symbol(op), Style{"d", true}); }

}  // namespace starpoly
