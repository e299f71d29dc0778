#include <doctest.h>

#include "starpoly/cli.hpp"
#include "starpoly/expr.hpp"
#include "starpoly/record.hpp"
#include "support.hpp"

#include <sstream>

using namespace starpoly;
using starpoly::testing::P;
using starpoly::testing::W;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "starpoly");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

ParseError parse_failure(const std::string& text, std::size_t n = 1) {
  try {
    parse_poly(text, n);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for " << text);
  return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("parser builds polynomials") {
  CHECK(P("x1*z1 - 1") == Poly::term(MultiIndex{1}, MultiIndex{1}) - Poly::constant(1, 1));
  CHECK(P("3/4*x1^2") == Poly::term(MultiIndex{2}, MultiIndex{0}, Rat(3, 4)));
  CHECK(P("-(x1 + z1)^2") == -(P("x1^2") + P("2*x1*z1") + P("z1^2")));
  CHECK(P("xi1*z1") == P("x1*z1"));
  CHECK(P(" x1 *\n z1 ") == P("x1*z1"));
  CHECK(P("2^3") == P("8"));
  CHECK(P("- -z1") == P("z1"));
  CHECK(P("z1^0") == P("1"));
  CHECK(P("x2*z1", 2) == Poly::term(MultiIndex{0, 1}, MultiIndex{1, 0}));
}

TEST_CASE("parser errors carry positions") {
  auto e = parse_failure("x1 z1");
  CHECK(e.line() == 1);
  CHECK(e.column() == 4);
  e = parse_failure("x1/2");
  CHECK(e.column() == 3);
  e = parse_failure("x1^-1");
  CHECK(e.column() == 4);
  e = parse_failure("x1 +\n  y1");
  CHECK(e.line() == 2);
  CHECK(e.column() == 3);
  e = parse_failure("x3", 2);
  CHECK(e.column() == 1);
  e = parse_failure("(x1 + 1");
  CHECK(e.line() == 1);
  CHECK_THROWS_AS(parse_poly("x1^2^3", 1), ParseError);
  CHECK_THROWS_AS(parse_poly("x1^1/2", 1), ParseError);
  CHECK_THROWS_AS(parse_poly("d1", 1), ParseError);
  CHECK_THROWS_AS(parse_poly("x0", 1), ParseError);
  CHECK_THROWS_AS(parse_poly("", 1), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0", 1), ParseError);
  CHECK_THROWS_AS(parse_weyl("x1*d1", 1), ParseError);
}

TEST_CASE("expression tree") {
  const auto tree = parse_expression("2*z1 - (d1)^3", ParseOptions{1, true});
  REQUIRE(tree->kind == ExprNode::Kind::Sum);
  REQUIRE(tree->children.size() == 2);
  CHECK(tree->subtract == std::vector<bool>{false, true});
  CHECK(tree->children[0]->kind == ExprNode::Kind::Product);
  const auto& power = *tree->children[1];
  CHECK(power.kind == ExprNode::Kind::Power);
  CHECK(power.exponent == 3);
  CHECK(power.children[0]->kind == ExprNode::Kind::Group);
  CHECK(power.children[0]->children[0]->family == VarFamily::Partial);
}

TEST_CASE("canonical printing") {
  CHECK(print_poly(P("z1*x1 - 1")) == "x1*z1 - 1");
  CHECK(print_poly(P("1 - 2*z1 + 1/2*z1^2")) == "1/2*z1^2 - 2*z1 + 1");
  CHECK(print_poly(P("0")) == "0");
  CHECK(print_poly(P("-1")) == "-1");
  CHECK(print_poly(P("-x1")) == "-x1");
  CHECK(print_poly(P("-3/2*x1*z2 + x2", 2)) == "-3/2*x1*z2 + x2");
  CHECK(print_weyl(W("d1*z1^2")) == "z1^2*d1 + 2*z1");
  CHECK(print_weyl(W("0")) == "0");
}

TEST_CASE("print and parse round trip") {
  PolySampler s(61);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + s.below(3);
    const Poly f = s.poly(n, 5, 6);
    const std::string text = print_poly(f);
    CHECK(parse_poly(text, n) == f);
    CHECK(print_poly(parse_poly(text, n)) == text);
  }
}

TEST_CASE("operators round trip through text") {
  PolySampler s(62);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + s.below(2);
    const WeylOp op = from_right_symbol(s.poly(n, 4, 4));
    CHECK(parse_weyl(print_weyl(op), n) == op);
  }
}

TEST_CASE("output records") {
  const OutputRecord r{"check", {{"suite", "ortho"}, {"case", "a\tb"}}, "pass", "x1\nz1"};
  CHECK(r.to_line() == "kind=check\tsuite=ortho\tcase=a b\tverdict=pass\tpayload=x1 z1");
}

TEST_CASE("cli goldens") {
  auto r = cli({"symbol", "--n", "1", "--dir", "left", "--input", "z1^2*d1^3"});
  CHECK(r.code == 0);
  CHECK(r.out == "x1^3*z1^2 - 6*x1^2*z1 + 6*x1\n");
  r = cli({"symbol", "--n", "1", "--dir", "right", "--input", "z1^2*d1^3"});
  CHECK(r.out == "x1^3*z1^2\n");
  r = cli({"star", "--n", "1", "--t", "0", "--f", "x1", "--g", "z1"});
  CHECK(r.out == "x1*z1\n");
  r = cli({"laguerre", "--n", "1", "--alpha", "2", "--k", "0", "--via", "star"});
  CHECK(r.out == "1/2*z1^2 - 2*z1 + 1\n");
}

TEST_CASE("cli subcommands") {
  CHECK(cli({"star", "--n", "1", "--t", "1", "--f", "x1^3", "--g", "z1^2"}).out == "x1^3*z1^2 - 6*x1^2*z1 + 6*x1\n");
  CHECK(cli({"phi", "--n", "1", "--t", "1", "--f", "x1*z1"}).out == "x1*z1 + 1\n");
  CHECK(cli({"phi", "--n", "1", "--t", "1", "--f", "x1*z1", "--inverse"}).out == "x1*z1 - 1\n");
  CHECK(cli({"taylor", "--n", "1", "--t", "1", "--f", "x1*z1"}).out == "a_0 = 1\na_1 = z1\n");
  CHECK(cli({"symbol", "--n", "1", "--dir", "l2r", "--input", "x1*z1"}).out == "x1*z1 + 1\n");
  CHECK(cli({"symbol", "--n", "1", "--dir", "r2l", "--input", "x1*z1"}).out == "x1*z1 - 1\n");
  CHECK(cli({"apply", "--n", "1", "--op", "z1^2*d1^3", "--poly", "z1^3"}).out == "6*z1^2\n");
  CHECK(cli({"laguerre", "--n", "2", "--alpha", "1,1", "--k", "0,0"}).out == "z1*z2 - z1 - z2 + 1\n");
  CHECK(cli({"laguerre", "--n", "1", "--alpha", "3", "--k", "1", "--via", "genfun"}).out ==
        cli({"laguerre", "--n", "1", "--alpha", "3", "--k", "1", "--via", "explicit"}).out);
}

TEST_CASE("cli reads expressions from stdin") {
  CHECK(cli({"star", "--n", "1", "--t", "1", "--f", "-", "--g", "z1"}, "x1\n").out == "x1*z1 - 1\n");
  CHECK(cli({"symbol", "--n", "1", "--dir", "left", "--input", "-"}, "z1^2*d1^3").out ==
        "x1^3*z1^2 - 6*x1^2*z1 + 6*x1\n");
}

TEST_CASE("cli check and mathieu records") {
  auto r = cli({"check", "--suite", "recur", "--mmax", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("kind=check\tsuite=recur\t") == 0);
  CHECK(r.out.find("kind=check-summary\tsuite=recur\tcases=6\tfailed=0\tverdict=pass") != std::string::npos);

  r = cli({"mathieu", "--oracle", "image", "--t", "1", "--f", "x1", "--b", "z1", "--mmax", "2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "kind=mathieu\toracle=image_Et\tt=1\tpower=star\tm=1\tpower_member=true\tverdict=member\tpayload=x1\n"
        "kind=mathieu\toracle=image_Et\tt=1\tpower=star\tm=2\tpower_member=true\tverdict=member\tpayload=x1^2\n"
        "kind=mathieu-summary\toracle=image_Et\tt=1\tpower=star\tmmax=2\tall_powers_member=true\tfirst_stable_N=1\t"
        "verdict=evidence\tpayload=z1\n");

  r = cli({"mathieu", "--oracle", "laguerre", "--k", "0", "--f", "1 - z1", "--mmax", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict=non-member\tpayload=z1^2 - 2*z1 + 1") != std::string::npos);

  r = cli({"mathieu", "--oracle", "image", "--t", "1", "--f", "z1^5", "--mmax", "10"});
  CHECK(r.code == 1);
  CHECK(r.out.find("verdict=degree-cap-exceeded") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"star", "--n", "1", "--f", "x1"}).code == 2);
  CHECK(cli({"star", "--n", "1", "--f", "x1 z1", "--g", "1"}).code == 2);
  CHECK(cli({"star", "--n", "1", "--t", "1/0", "--f", "x1", "--g", "1"}).code == 2);
  CHECK(cli({"star", "--n", "0", "--f", "x1", "--g", "1"}).code == 2);
  CHECK(cli({"check", "--suite", "nope"}).code == 2);
  CHECK(cli({"laguerre", "--n", "2", "--alpha", "1,2,3"}).code == 2);
  CHECK(cli({"laguerre", "--n", "1", "--alpha", "-1"}).code == 2);
  CHECK(cli({"apply", "--n", "1", "--op", "d1", "--poly", "x1"}).code == 2);
  CHECK(cli({"mathieu", "--oracle", "laguerre", "--f", "x1"}).code == 2);
  CHECK(cli({"star", "--n", "1", "--f", "-", "--g", "1"}, "").code == 2);
  const auto help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("star") != std::string::npos);
  const auto parse_error = cli({"phi", "--n", "1", "--f", "x1^"});
  CHECK(parse_error.code == 2);
  CHECK(parse_error.err.find("line 1, column") != std::string::npos);
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args{"check", "--suite", "oracles", "--degmax", "2"};
  CHECK(cli(args).out == cli(args).out);
}
