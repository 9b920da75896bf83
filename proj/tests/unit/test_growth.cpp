#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "omlab/growth.hpp"
#include "omlab/grid.hpp"
#include "oracle.hpp"

using omlab::GrowthFunction;
using omlab::YoungFunction;

TEST_CASE("growth evaluation") {
  CHECK(GrowthFunction::power(1)(3) == 3);
  CHECK(GrowthFunction::power_capped(0.5)(4) == 1);
  CHECK(GrowthFunction::power_capped(0.5)(0.25) == 0.5);
  CHECK(GrowthFunction::constant(2)(10) == 2);
  CHECK(GrowthFunction::inv_power(0.5)(4) == 0.5);
  CHECK(GrowthFunction::scale(3, GrowthFunction::power(2))(2) == 12);
  CHECK(GrowthFunction::power_log(1)(1) == doctest::Approx(1 + std::log(2.0)));
  CHECK_THROWS_AS(GrowthFunction::power(1)(0), std::domain_error);
  CHECK_THROWS_AS(GrowthFunction::power(1)(-2), std::domain_error);
  CHECK_THROWS_AS(GrowthFunction::power(0), std::invalid_argument);
  CHECK_THROWS_AS(GrowthFunction::constant(-1), std::invalid_argument);
  CHECK(GrowthFunction::scale(0.5, GrowthFunction::inv_power(0.5)).describe() ==
        "scale(0.5,inv-power(0.5))");
}

TEST_CASE("G1 membership") {
  CHECK(omlab::validate_g1(GrowthFunction::power(0.5)).member);
  CHECK(omlab::validate_g1(GrowthFunction::power(1)).member);
  CHECK(omlab::validate_g1(GrowthFunction::constant(3)).member);
  CHECK(omlab::validate_g1(GrowthFunction::power_capped(0.5)).member);
  const auto bad = omlab::validate_g1(GrowthFunction::power(2));
  CHECK_FALSE(bad.member);
  REQUIRE(bad.violation);
  CHECK(bad.violation->quantity == "phi(r2)/r2 <= phi(r1)/r1");
  CHECK_FALSE(omlab::validate_g1(GrowthFunction::inv_power(1)).member);
  const double one[] = {1.0};
  CHECK_THROWS_AS(omlab::validate_g1(GrowthFunction::power(1), one), std::invalid_argument);
}

TEST_CASE("G1 membership of powers matches 0 < a <= 1") {
  for (double a = 0.05; a < 2.0; a += 0.05) {
    CAPTURE(a);
    CHECK(omlab::validate_g1(GrowthFunction::power(a)).member == (a <= 1.0 + 1e-12));
  }
}

TEST_CASE("G2 membership") {
  const auto sq = YoungFunction::power(2);
  CHECK(omlab::validate_g2(GrowthFunction::power(0.5), sq, 1).member);
  CHECK_FALSE(omlab::validate_g2(GrowthFunction::power(0.9), sq, 1).member);
  CHECK(omlab::validate_g2(GrowthFunction::power_capped(0.5), sq, 1).member);
  // Elasticity of t + t^2 lies in [1, 2], which keeps t^0.5 in the class.
  CHECK(omlab::validate_g2(GrowthFunction::power(0.5),
                           YoungFunction::sum(YoungFunction::power(1), sq), 1)
            .member);
  // t^2 + t^4 has elasticity up to 4: the ratio grows like (r+s)^{1/4}.
  const auto rep = omlab::validate_g2(GrowthFunction::power(0.5),
                                      YoungFunction::sum(sq, YoungFunction::power(4)), 1);
  CHECK_FALSE(rep.member);
  REQUIRE(rep.partner_young);
  CHECK(rep.partner_young->describe() == "sum(power(2),power(4))");
}

TEST_CASE("G2 membership of powers matches a <= 1/p") {
  for (int n = 1; n <= 3; ++n) {
    for (double p : {1.0, 2.0, 3.0}) {
      for (double a : {0.1, 0.25, 0.3, 0.5, 0.75, 1.0, 1.5}) {
        const auto psi = GrowthFunction::power(a / n);
        // psi((r+s)^n) = (r+s)^a and Psi^{-1}(((r+s)/s)^n) = ((r+s)/s)^{n/p}.
        const bool expected = a <= n / p + 1e-12;
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(a);
        CHECK(omlab::validate_g2(psi, YoungFunction::power(p), n).member == expected);
      }
    }
  }
}

TEST_CASE("G_Theta membership") {
  const auto sq = YoungFunction::power(2);
  CHECK(omlab::validate_gtheta(GrowthFunction::inv_power(0.5), sq, 1).member);
  CHECK(omlab::validate_gtheta(GrowthFunction::constant(1), sq, 1).member);
  CHECK(omlab::validate_gtheta(GrowthFunction::scale(0.5, GrowthFunction::inv_power(0.5)), sq, 1)
            .member);
  const auto bad = omlab::validate_gtheta(GrowthFunction::inv_power(2), sq, 1);
  CHECK_FALSE(bad.member);
  // theta must decrease.
  CHECK_FALSE(omlab::validate_gtheta(GrowthFunction::power(0.5), sq, 1).member);
  // Bounded increase is accepted once the constant covers it: on [1, 2] the
  // ratio t^{3/2} grows by 2^{1.5}.
  const auto narrow = omlab::log_grid(1.0, 2.0, 20);
  const auto steep = GrowthFunction::inv_power(2);
  CHECK_FALSE(omlab::validate_gtheta(steep, sq, 1, narrow, 1.0).member);
  CHECK_FALSE(omlab::validate_gtheta(steep, sq, 1, narrow, 2.8).member);
  CHECK(omlab::validate_gtheta(steep, sq, 1, narrow, 2.9).member);
  CHECK_THROWS_AS(omlab::validate_gtheta(steep, sq, 1, narrow, 0.5), std::invalid_argument);
}

TEST_CASE("violations re-evaluate to real inequality failures") {
  const auto sq = YoungFunction::power(2);
  const auto g1 = omlab::validate_g1(GrowthFunction::power(1.5));
  REQUIRE(g1.violation);
  {
    const auto& v = *g1.violation;
    const auto phi = GrowthFunction::power(1.5);
    CHECK(v.lhs == phi(v.r2) / v.r2);
    CHECK(v.rhs == phi(v.r1) / v.r1);
    CHECK(v.lhs > v.rhs);
  }
  const auto g2 = omlab::validate_g2(GrowthFunction::power(0.9), sq, 1);
  REQUIRE(g2.violation);
  {
    const auto& v = *g2.violation;
    REQUIRE(v.s);
    const double s = *v.s;
    auto ratio = [&](double r) { return std::pow(r + s, 0.9) / std::sqrt((r + s) / s); };
    CHECK(oracle::close(v.lhs, ratio(v.r2), 1e-12));
    CHECK(oracle::close(v.rhs, ratio(v.r1), 1e-12));
    CHECK(v.lhs > v.rhs);
    CHECK(v.r1 < v.r2);
  }
  const auto gt = omlab::validate_gtheta(GrowthFunction::inv_power(2), sq, 1);
  REQUIRE(gt.violation);
  {
    const auto& v = *gt.violation;
    auto ratio = [](double t) { return std::sqrt(1.0 / t) * t * t; };
    CHECK(v.r1 < v.r2);
    CHECK(ratio(v.r2) > ratio(v.r1));
  }
}

TEST_CASE("check_preceq and check_approx") {
  const auto capped = GrowthFunction::power_capped(0.5);
  const auto root = GrowthFunction::power(0.5);
  auto r1 = omlab::check_preceq(capped, root);
  CHECK(r1.holds);
  CHECK(*r1.witness_c == 1.0);
  // t^{-1/4} only reaches 31.6 on the default t grid, inside the C range;
  // the failure near 0 needs a grid reaching below 1e-16.
  auto near = omlab::check_preceq(GrowthFunction::power(0.25), root);
  CHECK(near.holds);
  CHECK(*near.witness_c >= std::pow(1e6, 0.25));
  const auto deep = omlab::log_grid(1e-24, 1e6, 300);
  auto r2 = omlab::check_preceq(GrowthFunction::power(0.25), root, deep);
  CHECK_FALSE(r2.holds);
  REQUIRE(r2.counterexample_t);
  CHECK(*r2.counterexample_t < 1e-16);
  CHECK(std::pow(*r2.counterexample_t, 0.25) > 1e4 * std::sqrt(*r2.counterexample_t));
  auto r3 = omlab::check_approx(GrowthFunction::power(1), GrowthFunction::power(1));
  CHECK(r3.holds());
  CHECK(*r3.forward.witness_c == 1.0);
  CHECK(*r3.backward.witness_c == 1.0);
  // sqrt(t) outgrows the capped copy by 1e4 only past t = 1e8.
  CHECK(omlab::check_approx(capped, root).holds());
  CHECK_FALSE(omlab::check_approx(capped, root, omlab::log_grid(1e-6, 1e12, 300)).holds());
  // A constant factor is found as the smallest grid constant above it.
  auto r4 = omlab::check_preceq(GrowthFunction::scale(5, root), root);
  CHECK(r4.holds);
  CHECK(*r4.witness_c >= 5.0);
  CHECK(*r4.witness_c < 5.0 * std::pow(10.0, 0.08));
}

TEST_CASE("check_preceq is reflexive and transitive on the grid") {
  const std::vector<GrowthFunction> fam = {
      GrowthFunction::power(0.5),         GrowthFunction::power_capped(0.5),
      GrowthFunction::power_log(0.5),     GrowthFunction::constant(2),
      GrowthFunction::scale(3, GrowthFunction::power(0.5)), GrowthFunction::power_capped(0.25),
      GrowthFunction::inv_power(0.1)};
  for (const auto& a : fam) {
    auto r = omlab::check_preceq(a, a);
    CHECK(r.holds);
    CHECK(*r.witness_c == 1.0);
  }
  int chains = 0;
  for (const auto& a : fam)
    for (const auto& b : fam)
      for (const auto& c : fam) {
        auto ab = omlab::check_preceq(a, b);
        auto bc = omlab::check_preceq(b, c);
        if (!ab.holds || !bc.holds || *ab.witness_c * *bc.witness_c > ab.searched_c_max())
          continue;
        ++chains;
        auto ac = omlab::check_preceq(a, c);
        REQUIRE(ac.holds);
        CHECK(*ac.witness_c <= *ab.witness_c * *bc.witness_c * (1 + 1e-12));
      }
  CHECK(chains > 10);
}
