#include "starpoly/expr.hpp"

#include <cctype>

namespace starpoly {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const int l = line_, c = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Token::Kind::End, "", l, c});
        return out;
      }
      const char ch = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string text = digits();
        if (pos_ < src_.size() && src_[pos_] == '/') {
          advance();
          if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("'/' must be followed by a denominator inside a rational literal", line_, col_);
          text += '/' + digits();
        }
        out.push_back({Token::Kind::Number, text, l, c});
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        std::string text;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
          text += src_[pos_];
          advance();
        }
        text += digits();
        out.push_back({Token::Kind::Ident, text, l, c});
      } else {
        Token::Kind k;
        switch (ch) {
          case '+': k = Token::Kind::Plus; break;
          case '-': k = Token::Kind::Minus; break;
          case '*': k = Token::Kind::Star; break;
          case '^': k = Token::Kind::Caret; break;
          case '(': k = Token::Kind::LParen; break;
          case ')': k = Token::Kind::RParen; break;
          case '/': throw ParseError("'/' is only allowed inside a rational literal such as 1/2", l, c);
          default: throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
        }
        advance();
        out.push_back({k, std::string(1, ch), l, c});
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }
  std::string digits() {
    std::string s;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      s += src_[pos_];
      advance();
    }
    return s;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& options) : toks_(std::move(tokens)), opt_(options) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    const Token& t = peek();
    if (t.kind == Token::Kind::Number || t.kind == Token::Kind::Ident || t.kind == Token::Kind::LParen)
      throw ParseError("implicit multiplication is not allowed; use '*'", t.line, t.column);
    if (t.kind != Token::Kind::End) throw ParseError("unexpected '" + t.text + "'", t.line, t.column);
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  static ExprPtr node(ExprNode::Kind kind, const Token& at) {
    auto n = std::make_unique<ExprNode>();
    n->kind = kind;
    n->line = at.line;
    n->column = at.column;
    return n;
  }

  ExprPtr sum() {
    const Token& start = peek();
    ExprPtr first = product();
    if (peek().kind != Token::Kind::Plus && peek().kind != Token::Kind::Minus) return first;
    ExprPtr s = node(ExprNode::Kind::Sum, start);
    s->children.push_back(std::move(first));
    s->subtract.push_back(false);
    while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      const bool minus = take().kind == Token::Kind::Minus;
      s->children.push_back(product());
      s->subtract.push_back(minus);
    }
    return s;
  }

  ExprPtr product() {
    const Token& start = peek();
    ExprPtr first = unary();
    if (peek().kind != Token::Kind::Star) return first;
    ExprPtr p = node(ExprNode::Kind::Product, start);
    p->children.push_back(std::move(first));
    while (peek().kind == Token::Kind::Star) {
      take();
      p->children.push_back(unary());
    }
    return p;
  }

  ExprPtr unary() {
    if (peek().kind == Token::Kind::Minus) {
      ExprPtr neg = node(ExprNode::Kind::Negate, take());
      neg->children.push_back(unary());
      return neg;
    }
    if (peek().kind == Token::Kind::Plus) {
      take();
      return unary();
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (peek().kind != Token::Kind::Caret) return base;
    const Token& caret = take();
    const Token& e = peek();
    if (e.kind == Token::Kind::Minus) throw ParseError("negative exponents are not allowed", e.line, e.column);
    if (e.kind != Token::Kind::Number || e.text.find('/') != std::string::npos)
      throw ParseError("exponent must be a non-negative integer literal", e.line, e.column);
    take();
    if (e.text.size() > 6) throw ParseError("exponent too large", e.line, e.column);
    ExprPtr p = node(ExprNode::Kind::Power, caret);
    p->exponent = static_cast<unsigned>(std::stoul(e.text));
    p->children.push_back(std::move(base));
    if (peek().kind == Token::Kind::Caret)
      throw ParseError("chained '^' is ambiguous; add parentheses", peek().line, peek().column);
    return p;
  }

  ExprPtr atom() {
    const Token& t = take();
    switch (t.kind) {
      case Token::Kind::Number: {
        ExprPtr n = node(ExprNode::Kind::Number, t);
        try {
          n->value = parse_rational(t.text);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), t.line, t.column);
        }
        return n;
      }
      case Token::Kind::Ident:
        return variable(t);
      case Token::Kind::LParen: {
        ExprPtr g = node(ExprNode::Kind::Group, t);
        g->children.push_back(sum());
        const Token& close = take();
        if (close.kind != Token::Kind::RParen)
          throw ParseError(close.kind == Token::Kind::End ? "missing ')'" : "expected ')' but found '" + close.text + "'",
                           close.line, close.column);
        return g;
      }
      case Token::Kind::End:
        throw ParseError("unexpected end of input", t.line, t.column);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.line, t.column);
    }
  }

  ExprPtr variable(const Token& t) {
    std::size_t split = 0;
    while (split < t.text.size() && std::isalpha(static_cast<unsigned char>(t.text[split]))) ++split;
    const std::string name = t.text.substr(0, split);
    const std::string digits = t.text.substr(split);
    ExprPtr v = node(ExprNode::Kind::Variable, t);
    if (name == "x" || name == "xi") {
      v->family = VarFamily::Xi;
    } else if (name == "z") {
      v->family = VarFamily::Z;
    } else if (name == "d" || name == "D") {
      if (!opt_.allow_partials)
        throw ParseError("'" + t.text + "' is a derivative; only operator expressions admit d1..dn", t.line, t.column);
      v->family = VarFamily::Partial;
    } else {
      throw ParseError("unknown variable '" + t.text + "'", t.line, t.column);
    }
    bool numeric = !digits.empty() && digits.size() <= 6;
    for (char c : digits) numeric = numeric && std::isdigit(static_cast<unsigned char>(c));
    if (!numeric) throw ParseError("variable '" + t.text + "' needs a numeric index", t.line, t.column);
    const auto idx = std::stoul(digits);
    if (idx < 1 || idx > opt_.n)
      throw ParseError("variable '" + t.text + "' out of range for n = " + std::to_string(opt_.n), t.line, t.column);
    v->index = idx - 1;
    return v;
  }

  std::vector<Token> toks_;
  ParseOptions opt_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text, const ParseOptions& options) {
  return Parser(Lexer(text).run(), options).parse();
}

}  // namespace starpoly
