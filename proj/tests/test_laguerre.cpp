#include <doctest.h>

#include "starpoly/laguerre.hpp"
#include "support.hpp"

using namespace starpoly;
using starpoly::testing::P;
using starpoly::testing::W;
using starpoly::testing::Z;

namespace {

/// Rodrigues form z^{-k}/m! (d - 1)^m z^{m+k}, since d^m (e^{-z} q) = e^{-z} (d - 1)^m q.
ZPoly rodrigues(unsigned m, unsigned k) {
  const ZPoly top = weyl_apply(weyl_pow(W("d1 - 1"), m), ZPoly(Poly::z_power(MultiIndex{m + k})));
  const auto q = divide_by_monomial(top.poly(), Monomial{MultiIndex{0}, MultiIndex{k}});
  REQUIRE(q);
  return ZPoly(*q * ratio(Int(1), factorial(m)));
}

}  // namespace

TEST_CASE("one-variable Laguerre polynomials") {
  for (int k = 0; k <= 4; ++k) CHECK(laguerre1(0, k) == Z("1"));
  CHECK(laguerre1(1, 0) == Z("1 - z1"));
  CHECK(laguerre1(2, 0) == Z("1 - 2*z1 + 1/2*z1^2"));
  CHECK(laguerre1(1, 1) == Z("2 - z1"));
  CHECK(laguerre1(2, 0, 2, 1) == Z("1 - 2*z2 + 1/2*z2^2", 2));
  CHECK_THROWS_AS(laguerre1(-1, 0), std::domain_error);
  CHECK_THROWS_AS(laguerre1(2, -1), std::domain_error);
}

TEST_CASE("multi-variable Laguerre polynomials") {
  CHECK(laguerre(LaguerreSpec(MultiIndex{0, 0}, MultiIndex{2, 3})) == Z("1", 2));
  CHECK(laguerre(LaguerreSpec(MultiIndex{1, 1}, MultiIndex{0, 0})) == Z("1 - z1", 2) * Z("1 - z2", 2));
  CHECK(laguerre(LaguerreSpec(MultiIndex{1}, MultiIndex{1})) == Z("2 - z1"));
  CHECK_THROWS_AS(LaguerreSpec(MultiIndex{1, 0}, MultiIndex{1}), DimensionError);
}

TEST_CASE("star route") {
  CHECK(laguerre_star(LaguerreSpec(MultiIndex{1}, MultiIndex{0})) == P("1 - x1*z1"));
  CHECK(laguerre_star(LaguerreSpec(MultiIndex{0}, MultiIndex{0})) == P("1"));
  CHECK(laguerre_star(LaguerreSpec(MultiIndex{2}, MultiIndex{0})) == P("1/2*x1^2*z1^2 - 2*x1*z1 + 1"));
  CHECK(laguerre_from_star_at_one(LaguerreSpec(MultiIndex{1}, MultiIndex{0})) == Z("1 - z1"));
  CHECK(laguerre_from_star_at_one(LaguerreSpec(MultiIndex{0}, MultiIndex{3})) == Z("1"));
  CHECK(laguerre_from_star_at_one(LaguerreSpec(MultiIndex{2}, MultiIndex{0})) == Z("1 - 2*z1 + 1/2*z1^2"));
}

TEST_CASE("gamma moments") {
  CHECK(gamma_moment(0) == 1);
  CHECK(gamma_moment(3) == 6);
  CHECK(gamma_moment(5) == 120);
  CHECK_THROWS_AS(gamma_moment(-1), std::domain_error);
}

TEST_CASE("weighted integrals") {
  const ZPoly l1 = laguerre1(1, 0), l2 = laguerre1(2, 0);
  CHECK(integrate_weight(l1 * l1, MultiIndex{0}) == 1);
  CHECK(integrate_weight(l1 * l2, MultiIndex{0}) == 0);
  CHECK(integrate_weight(Z("1"), MultiIndex{2}) == 2);
  CHECK_THROWS_AS(integrate_weight(Z("1"), MultiIndex{0, 0}), DimensionError);

  const std::vector<Rat> one{Rat(1)}, two{Rat(2)};
  CHECK(integrate_weight_xi(P("1"), one) == 1);
  CHECK(integrate_weight_xi(pow(P("x1*z1 - 1"), 2), one) == 1);
  CHECK(integrate_weight_xi(P("z1"), two) == Rat(1, 2));
  CHECK_THROWS_AS(integrate_weight_xi(P("1"), std::vector<Rat>{Rat(0)}), std::domain_error);
  CHECK_THROWS_AS(integrate_weight_xi(P("1"), std::vector<Rat>{Rat(-1, 2)}), std::domain_error);
}

TEST_CASE("generating function coefficients") {
  CHECK(laguerre_generating_series(0, 0)[0] == Z("1"));
  CHECK(laguerre_generating_series(0, 2)[2] == Z("1 - 2*z1 + 1/2*z1^2"));
  CHECK(laguerre_generating_series(1, 1)[1] == Z("2 - z1"));
  CHECK(generating_check(3, 8).passed());
  CHECK(laguerre_from_generating(LaguerreSpec(MultiIndex{2, 1}, MultiIndex{0, 1})) ==
        laguerre(LaguerreSpec(MultiIndex{2, 1}, MultiIndex{0, 1})));
}

TEST_CASE("derivative identity") {
  CHECK(identity_dk_check(0, 0));
  CHECK(identity_dk_check(1, 1));
  CHECK(identity_dk_check(2, 1));
  CHECK(-d_z(laguerre1(2, 0), 0) == laguerre1(1, 1));
}

TEST_CASE("three-term recurrence and ODE") {
  CHECK(Rat(2) * laguerre1(2, 0) == Z("3 - z1") * laguerre1(1, 0) - laguerre1(0, 0));
  CHECK(Rat(2) * laguerre1(2, 0) == Z("z1^2 - 4*z1 + 2"));
  CHECK(Z("z1") * d_z(laguerre1(1, 0), 0) == laguerre1(1, 0) - laguerre1(0, 0));
  CHECK(recurrence_check(8).passed());
  CHECK_THROWS_AS(recurrence_check(0), std::domain_error);

  const ZPoly f = laguerre1(1, 0);
  CHECK((Z("z1") * d_z(d_z(f, 0), 0) + Z("1 - z1") * d_z(f, 0) + f).is_zero());
  const ZPoly g = laguerre1(3, 2);
  CHECK((Z("z1") * d_z(d_z(g, 0), 0) + Z("3 - z1") * d_z(g, 0) + Rat(3) * g).is_zero());
  CHECK(ode_check(8, 4).passed());
}

TEST_CASE("star exponential") {
  CHECK(star_exp_check(MultiIndex{0}, 0).passed());
  CHECK(star_exp_check(MultiIndex{0}, 1).passed());
  CHECK(star_exp_check(MultiIndex{1}, 2).passed());
  CHECK(star_exp_check(MultiIndex{1, 0}, 3).passed());
}

TEST_CASE("even identity") {
  CHECK(even_identity_check(MultiIndex{0}, MultiIndex{0}));
  CHECK(even_identity_check(MultiIndex{1}, MultiIndex{1}));
  CHECK(even_identity_check(MultiIndex{2}, MultiIndex{1}));
  CHECK(even_identity_check(MultiIndex{1, 2}, MultiIndex{2, 0}));
}

TEST_CASE("Laguerre polynomials match the Rodrigues form") {
  for (unsigned m = 0; m <= 8; ++m)
    for (unsigned k = 0; k <= 4; ++k) CHECK(laguerre1(static_cast<int>(m), static_cast<int>(k)) == rodrigues(m, k));
}

TEST_CASE("Laguerre polynomials from powers of d - 1") {
  for (unsigned m = 0; m <= 6; ++m) {
    const ZPoly via_weyl = weyl_apply(weyl_pow(W("d1 - 1"), m), ZPoly(Poly::z_power(MultiIndex{m})));
    CHECK(laguerre1(static_cast<int>(m), 0) == ZPoly(via_weyl.poly() * ratio(Int(1), factorial(m))));
  }
}

TEST_CASE("leading coefficient") {
  for (unsigned m = 0; m <= 8; ++m)
    for (unsigned k = 0; k <= 4; ++k) {
      const ZPoly l = laguerre1(static_cast<int>(m), static_cast<int>(k));
      CHECK(l.degree().total == static_cast<int>(m));
      const Rat lead = l.poly().coefficient(Monomial{MultiIndex{0}, MultiIndex{m}});
      CHECK(lead == ratio(Int(m % 2 ? -1 : 1), factorial(m)));
    }
}

TEST_CASE("construction routes agree") {
  for (std::size_t n : {1u, 2u})
    for (const auto& k : indices_up_to(n, 3))
      for (const auto& a : indices_up_to(n, 4)) {
        const LaguerreSpec spec(a, k);
        CHECK(laguerre(spec) == laguerre_from_star_at_one(spec));
        CHECK(laguerre(spec) == laguerre_from_generating(spec));
        CHECK(laguerre_star(spec) == laguerre_star_z(spec));
        CHECK(laguerre_star(spec) == substitute_xi_z(laguerre(spec)));
      }
}
