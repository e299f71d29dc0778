#include <doctest.h>

#include "starpoly/weyl.hpp"
#include "support.hpp"

using namespace starpoly;
using starpoly::testing::P;
using starpoly::testing::W;
using starpoly::testing::Z;

namespace {

WeylOp random_op(PolySampler& s, std::size_t n) {
  WeylOp op(n);
  const unsigned terms = 1 + static_cast<unsigned>(s.below(3));
  for (unsigned j = 0; j < terms; ++j) op.add_term(s.index(n, 3), s.z_poly(n, 2, 2));
  return op;
}

}  // namespace

TEST_CASE("apply") {
  CHECK(weyl_apply(WeylOp::partial(1, 0), Z("z1^2")) == Z("2*z1"));
  CHECK(weyl_apply(W("z1^2*d1^3"), Z("z1^3")) == Z("6*z1^2"));
  const ZPoly p = Z("z1^3*z2 - 1/2*z2^2 + 4", 2);
  CHECK(weyl_apply(WeylOp::identity(2), p) == p);
  CHECK_THROWS_AS(weyl_apply(WeylOp::identity(2), Z("z1")), DimensionError);
}

TEST_CASE("compose") {
  const WeylOp d = WeylOp::partial(1, 0);
  const WeylOp z = WeylOp::multiplication(Z("z1"));
  CHECK(weyl_compose(d, z) == W("z1*d1 + 1"));
  CHECK(weyl_compose(z, d) == W("z1*d1"));
  const WeylOp lhs = weyl_compose(WeylOp::partial_power(MultiIndex{3}), WeylOp::multiplication(Z("z1^2")));
  CHECK(lhs == W("z1^2*d1^3 + 6*z1*d1^2 + 6*d1"));
  for (unsigned m = 0; m <= 6; ++m) {
    const ZPoly zm(Poly::z_power(MultiIndex{m}));
    CHECK(weyl_apply(lhs, zm) == weyl_apply(WeylOp::partial_power(MultiIndex{3}), Z("z1^2") * zm));
  }
  CHECK(weyl_pow(W("d1 - 1"), 0) == WeylOp::identity(1));
  CHECK(weyl_pow(W("d1 - 1"), 2) == W("d1^2 - 2*d1 + 1"));
}

TEST_CASE("right symbol") {
  CHECK(right_symbol(W("z1^2*d1^3")) == P("x1^3*z1^2"));
  CHECK(right_symbol(WeylOp::partial(1, 0)) == P("x1"));
  CHECK(right_symbol(WeylOp::multiplication(Z("z1^2 - 3"))) == P("z1^2 - 3"));
  CHECK(from_right_symbol(P("x1^3*z1^2")) == W("z1^2*d1^3"));
  CHECK(from_right_symbol(P("1")) == WeylOp::identity(1));
  CHECK(from_right_symbol(P("x1 + z1")) == W("d1 + z1"));
}

TEST_CASE("left symbol") {
  CHECK(left_symbol(W("z1^2*d1^3")) == P("x1^3*z1^2 - 6*x1^2*z1 + 6*x1"));
  CHECK(left_symbol(WeylOp::partial(1, 0)) == P("x1"));
  CHECK(from_left_symbol(P("x1*z1")) == W("z1*d1 + 1"));
}

TEST_CASE("interchange of symbols on the monomial basis") {
  for (std::size_t n : {1u, 2u}) {
    const unsigned bound = n == 1 ? 6 : 4;
    const StarContext plus(n, 1), minus(n, -1);
    for (const auto& a : indices_up_to(n, bound))
      for (const auto& b : indices_up_to(n, bound - static_cast<unsigned>(a.total()))) {
        const Poly p = Poly::term(a, b);
        CHECK(right_symbol(from_left_symbol(p)) == phi(plus, p));
        CHECK(left_symbol(from_right_symbol(p)) == phi(minus, p));
      }
  }
}

TEST_CASE("symbols of constant-coefficient operators composed with multiplications") {
  PolySampler s(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + s.below(2);
    const Poly lambda = s.xi_poly(n, 3, 3);
    const ZPoly p = s.z_poly(n, 3, 3);
    const WeylOp lambda_op = from_right_symbol(lambda);
    const WeylOp p_op = WeylOp::multiplication(p);
    CHECK(right_symbol(weyl_compose(lambda_op, p_op)) == star(StarContext(n, -1), lambda, p));
    CHECK(left_symbol(weyl_compose(p_op, lambda_op)) == star(StarContext(n, 1), lambda, p));
  }
}

TEST_CASE("composition is operator composition") {
  PolySampler s(32);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + s.below(2);
    const WeylOp a = random_op(s, n), b = random_op(s, n), c = random_op(s, n);
    const ZPoly p = s.z_poly(n, 5, 4);
    CHECK(weyl_apply(weyl_compose(a, b), p) == weyl_apply(a, weyl_apply(b, p)));
    CHECK(weyl_apply(a, p) == starpoly::testing::apply_by_iterated_partials(a, p));
    CHECK(weyl_compose(weyl_compose(a, b), c) == weyl_compose(a, weyl_compose(b, c)));
  }
}

TEST_CASE("symbol round trips") {
  PolySampler s(33);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + s.below(2);
    const WeylOp op = random_op(s, n);
    CHECK(from_right_symbol(right_symbol(op)) == op);
    CHECK(from_left_symbol(left_symbol(op)) == op);
    const Poly sym = s.poly(n, 4, 4);
    CHECK(right_symbol(from_right_symbol(sym)) == sym);
    CHECK(left_symbol(from_left_symbol(sym)) == sym);
  }
}

TEST_CASE("apply is linear") {
  PolySampler s(34);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + s.below(2);
    const WeylOp op = random_op(s, n);
    const ZPoly p = s.z_poly(n, 4, 3), q = s.z_poly(n, 4, 3);
    const Rat c = s.nonzero_rat();
    CHECK(weyl_apply(op, p + c * q) == weyl_apply(op, p) + c * weyl_apply(op, q));
  }
}
