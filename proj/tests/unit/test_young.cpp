#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "omlab/grid.hpp"
#include "omlab/young.hpp"
#include "oracle.hpp"

using omlab::YoungFunction;

namespace {

std::vector<YoungFunction> families() {
  return {YoungFunction::power(2),
          YoungFunction::power_log(1),
          YoungFunction::exp_minus_one(),
          YoungFunction::ramp(1),
          YoungFunction::sum(YoungFunction::power(1), YoungFunction::power(2)),
          YoungFunction::arg_scale(0.5, YoungFunction::exp_minus_one()),
          YoungFunction::sum(YoungFunction::power_log(2), YoungFunction::ramp(0.25)),
          YoungFunction::arg_scale(3, YoungFunction::power_log(1.5))};
}

}  // namespace

TEST_CASE("evaluation follows the family formulas") {
  CHECK(YoungFunction::power(2)(2) == 4);
  CHECK(YoungFunction::exp_minus_one()(0) == 0);
  CHECK(YoungFunction::ramp(1)(0.5) == 0);
  CHECK(YoungFunction::ramp(1)(3) == 2);
  CHECK(YoungFunction::power_log(1)(1) == doctest::Approx(std::log(std::exp(1.0) + 1)));
  CHECK(YoungFunction::arg_scale(2, YoungFunction::power(3))(1) == 8);
  CHECK(YoungFunction::sum(YoungFunction::power(1), YoungFunction::power(2))(3) == 12);
  for (const auto& phi : families()) CHECK(phi(0) == 0);
}

TEST_CASE("evaluation rejects negative and non-finite arguments") {
  const auto phi = YoungFunction::power(2);
  CHECK_THROWS_AS(phi(-1), std::domain_error);
  CHECK_THROWS_AS(phi(std::numeric_limits<double>::infinity()), std::domain_error);
  CHECK_THROWS_AS(phi(std::nan("")), std::domain_error);
  CHECK(phi.saturating(std::numeric_limits<double>::infinity()) ==
        std::numeric_limits<double>::infinity());
}

TEST_CASE("constructors validate parameters") {
  CHECK_THROWS_AS(YoungFunction::power(0.5), std::invalid_argument);
  CHECK_THROWS_AS(YoungFunction::power_log(0.9), std::invalid_argument);
  CHECK_THROWS_AS(YoungFunction::ramp(0), std::invalid_argument);
  CHECK_THROWS_AS(YoungFunction::arg_scale(-1, YoungFunction::power(1)), std::invalid_argument);
  CHECK_THROWS_AS(YoungFunction::power(std::nan("")), std::invalid_argument);
}

TEST_CASE("describe round-trips parameters") {
  CHECK(YoungFunction::sum(YoungFunction::power(2), YoungFunction::ramp(1)).describe() ==
        "sum(power(2),ramp(1))");
  CHECK(YoungFunction::arg_scale(0.1, YoungFunction::exp_minus_one()).describe() ==
        "arg-scale(0.10000000000000001,exp-minus-one)");
}

TEST_CASE("generalized inverse: closed forms") {
  CHECK(YoungFunction::power(2).inverse(4) == 2);
  CHECK(YoungFunction::power(2).inverse(0) == 0);
  CHECK(YoungFunction::ramp(1).inverse(0) == 1);
  CHECK(YoungFunction::ramp(1).inverse(3) == 4);
  CHECK(YoungFunction::exp_minus_one().inverse(std::expm1(2.0)) == doctest::Approx(2.0));
  CHECK(YoungFunction::arg_scale(2, YoungFunction::power(2)).inverse(16) == 2);
  CHECK(YoungFunction::sum(YoungFunction::ramp(2), YoungFunction::ramp(3)).inverse(0) == 2);
  CHECK_THROWS_AS(YoungFunction::power(2).inverse(-1), std::domain_error);
  CHECK_THROWS_AS(YoungFunction::power(2).inverse(std::numeric_limits<double>::infinity()),
                  std::domain_error);
}

TEST_CASE("generalized inverse: values frozen from the high-precision oracle") {
  // tests/oracles/frozen_values.py, 40 digits, truncated here.
  CHECK(oracle::close(YoungFunction::power_log(1).inverse(1), 0.7957028110823631216, 1e-14));
  CHECK(oracle::close(YoungFunction::power_log(2).inverse(10), 2.4652095872952079419, 1e-14));
  CHECK(oracle::close(YoungFunction::sum(YoungFunction::power(2), YoungFunction::power(4))
                          .inverse(1),
                      0.78615137775742328607, 1e-14));
  CHECK(oracle::close(YoungFunction::sum(YoungFunction::power(1), YoungFunction::power(2))
                          .inverse(3),
                      1.3027756377319946466, 1e-14));
}

TEST_CASE("generalized inverse agrees with a plain bisection of the definition") {
  oracle::Rng rng(11);
  for (const auto& phi : families()) {
    for (int i = 0; i < 60; ++i) {
      const double s = rng.log_uniform(1e-6, 1e6);
      CAPTURE(phi.describe());
      CAPTURE(s);
      CHECK(oracle::close(phi.inverse(s), oracle::inverse(phi, s), 1e-12));
    }
  }
}

TEST_CASE("generalized inverse: monotone, sandwich, and zero at zero") {
  const auto s_grid = omlab::log_grid(1e-6, 1e6, 120);
  for (const auto& phi : families()) {
    CAPTURE(phi.describe());
    double prev = 0.0;
    for (double s : s_grid) {
      const double inv = phi.inverse(s);
      CHECK(inv >= prev);
      prev = inv;
      CHECK(phi(inv) <= s * (1 + 1e-9));
      const double image = phi(s);
      // phi(s) = inf makes the right-hand inverse +inf; nothing to check.
      if (std::isfinite(image)) CHECK(s <= phi.inverse(image) * (1 + 1e-9));
    }
    if (phi.positive_on_open_half_line()) CHECK(phi.inverse(0) == 0);
    else CHECK(phi.inverse(0) == phi.zero_plateau_end());
  }
  CHECK_FALSE(YoungFunction::ramp(1).positive_on_open_half_line());
}

TEST_CASE("inverse bound transfers to the Young functions") {
  // Phi2^{-1}(s) <= C1 Phi1^{-1}(C2 s) on an s grid implies
  // Phi1(t / C1) <= C2 Phi2(t) at t = Phi2^{-1}(s).
  const auto s_grid = omlab::log_grid(1e-4, 1e4, 80);
  const auto fam = families();
  int exercised = 0;
  for (const auto& p1 : fam) {
    for (const auto& p2 : fam) {
      for (double c2 : {0.5, 1.0, 2.0}) {
        const auto rel = omlab::check_domination([&](double s) { return p2.inverse(s); },
                                                 [&](double s) { return p1.inverse(c2 * s); },
                                                 s_grid, omlab::grids::default_c());
        if (!rel.holds) continue;
        ++exercised;
        const double c1 = *rel.witness_c;
        for (double s : s_grid) {
          const double t = p2.inverse(s);
          CAPTURE(p1.describe());
          CAPTURE(p2.describe());
          CAPTURE(s);
          CHECK(p1(t / c1) <= c2 * p2(t) * (1 + 1e-9));
        }
      }
    }
  }
  CHECK(exercised > 20);
}

TEST_CASE("validate_young accepts every family") {
  for (const auto& phi : families()) {
    const auto rep = omlab::validate_young(phi);
    CAPTURE(phi.describe());
    CAPTURE(rep.violation);
    CHECK(rep.passed);
  }
  CHECK(omlab::validate_young(YoungFunction::power(1)).passed);
  CHECK(omlab::validate_young(YoungFunction::sum(YoungFunction::power(2), YoungFunction::ramp(1)))
            .passed);
}

TEST_CASE("check_prec: witnesses and counterexamples") {
  const auto id = YoungFunction::power(1);
  const auto e = YoungFunction::exp_minus_one();
  const auto sq = YoungFunction::power(2);

  auto r1 = omlab::check_prec(id, e);
  CHECK(r1.holds);
  CHECK(*r1.witness_c == 1.0);

  auto r2 = omlab::check_prec(sq, id);
  CHECK_FALSE(r2.holds);
  REQUIRE(r2.counterexample_t);
  CHECK(*r2.counterexample_t > 1.0);
  // The recorded counterexample violates the relation at the largest C.
  CHECK(sq(*r2.counterexample_t) > id(r2.searched_c_max() * *r2.counterexample_t));
  CHECK(r2.rejected.size() == r2.c_grid.size());
  for (const auto& [c, t] : r2.rejected) CHECK(sq(t) > id(c * t));

  auto r3 = omlab::check_prec(sq, sq);
  CHECK(r3.holds);
  CHECK(*r3.witness_c == 1.0);
  CHECK(r3.t_grid.size() == 200);
  CHECK(r3.c_grid.size() == 101);

  // Arg-scaling shows up as the witness, rounded up to the C grid.
  auto r4 = omlab::check_prec(YoungFunction::arg_scale(3, sq), sq);
  CHECK(r4.holds);
  CHECK(*r4.witness_c >= 3.0);
  CHECK(*r4.witness_c < 3.0 * std::pow(10.0, 0.08) * (1 + 1e-12));
}

TEST_CASE("check_prec is reflexive and transitive on the grid") {
  const auto fam = families();
  for (const auto& a : fam) {
    auto r = omlab::check_prec(a, a);
    CHECK(r.holds);
    CHECK(*r.witness_c <= 1.0);
  }
  for (const auto& a : fam)
    for (const auto& b : fam)
      for (const auto& c : fam) {
        auto ab = omlab::check_prec(a, b);
        if (!ab.holds) continue;
        // b < c has to hold at the points C_ab t that the chain passes through.
        std::vector<double> shifted;
        for (double t : omlab::grids::default_t()) shifted.push_back(*ab.witness_c * t);
        auto bc = omlab::check_prec(b, c, shifted);
        // Products beyond the searched C range cannot be witnessed.
        if (!bc.holds || *ab.witness_c * *bc.witness_c > ab.searched_c_max()) continue;
        auto ac = omlab::check_prec(a, c);
        CAPTURE(a.describe());
        CAPTURE(b.describe());
        CAPTURE(c.describe());
        REQUIRE(ac.holds);
        CHECK(*ac.witness_c <= *ab.witness_c * *bc.witness_c * (1 + 1e-12));
      }
}
