#include <cmath>
#include <random>

#include "doctest.h"
#include "nlgreen/errors.hpp"
#include "nlgreen/potentials.hpp"
#include "nlgreen/quadrature.hpp"
#include "nlgreen/sources.hpp"

using namespace nlgreen;

TEST_CASE("distribution values") {
  const auto step = SourceDistribution::step(-4, 8);
  CHECK(step(0) == 1.0);
  CHECK(step(-4) == 1.0);
  CHECK(step(8) == 1.0);
  CHECK(step(9) == 0.0);
  CHECK(step(-4.0001) == 0.0);
  CHECK(SourceDistribution::gaussian(1)(0) == 1.0);
  CHECK(SourceDistribution::gaussian(2)(2) == doctest::Approx(std::exp(-1.0)));
  CHECK(SourceDistribution::bell(1, 1)(-1) == 1.0);
  CHECK(SourceDistribution::bell(1, 1)(0) == 0.25);
  CHECK(SourceDistribution::exp_abs()(-2) == doctest::Approx(std::exp(-2.0)));
  CHECK(SourceDistribution::unit_step01()(0.5) == 1.0);
  CHECK(SourceDistribution::unit_step01()(1.5) == 0.0);
}

TEST_CASE("invalid distributions are rejected") {
  CHECK_THROWS_AS(SourceDistribution::step(1, 1), Error);
  CHECK_THROWS_AS(SourceDistribution::step(2, 1), Error);
  CHECK_THROWS_AS(SourceDistribution::gaussian(0), Error);
  CHECK_THROWS_AS(SourceDistribution::gaussian(-1), Error);
  CHECK_THROWS_AS(SourceDistribution::bell(1, 0), Error);
  CHECK_THROWS_AS(SourceDistribution::custom({}, {0, 1}), Error);
  CHECK_THROWS_AS(SourceDistribution::custom([](double) { return 1.0; }, {1, 0}), Error);
}

TEST_CASE("breakpoints") {
  CHECK(SourceDistribution::step(-4, 8).breakpoints() == std::vector<double>{-4, 8});
  CHECK(SourceDistribution::exp_abs().breakpoints() == std::vector<double>{0});
  CHECK(SourceDistribution::gaussian(1).breakpoints().empty());
  CHECK(SourceDistribution::bell(1, 1).breakpoints().empty());
  CHECK(SourceDistribution::unit_step01().breakpoints() == std::vector<double>{0, 1});
}

TEST_CASE("effective support") {
  const Interval s = SourceDistribution::step(-4, 8).effective_support(0.3);
  CHECK(s.lo == -4);
  CHECK(s.hi == 8);
  const Interval g = SourceDistribution::gaussian(1).effective_support(1e-16);
  CHECK(g.hi == doctest::Approx(6.0697085175405854034).epsilon(1e-14));
  CHECK(g.lo == -g.hi);
  const Interval e = SourceDistribution::exp_abs().effective_support(1e-16);
  CHECK(e.hi == doctest::Approx(36.841361487904730944).epsilon(1e-14));
  const Interval b = SourceDistribution::bell(1, 1).effective_support(1e-8);
  // ((x + 1)^2 + 1)^2 = 1e8 -> |x + 1| = sqrt(1e4 - 1)
  CHECK(b.hi == doctest::Approx(-1 + std::sqrt(9999.0)));
  CHECK(b.lo == doctest::Approx(-1 - std::sqrt(9999.0)));
  CHECK_THROWS_AS(SourceDistribution::exp_abs().effective_support(0.0), Error);
  // |R| < tol outside the support
  for (const auto& src : {SourceDistribution::gaussian(0.5), SourceDistribution::exp_abs(),
                          SourceDistribution::bell(-2, 0.5)}) {
    const Interval sup = src.effective_support(1e-10);
    CHECK(src(sup.hi + 1e-6) < 1e-10);
    CHECK(src(sup.lo - 1e-6) < 1e-10);
  }
}

TEST_CASE("distributions are non-negative") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> xs(-50, 50);
  const SourceDistribution all[] = {
      SourceDistribution::step(-1, 2), SourceDistribution::exp_abs(),
      SourceDistribution::gaussian(0.3), SourceDistribution::bell(1, -2),
      SourceDistribution::unit_step01()};
  for (int i = 0; i < 1000; ++i) {
    const double x = xs(rng);
    for (const auto& r : all) CHECK(r(x) >= 0.0);
  }
}

TEST_CASE("total mass self-test through the quadrature engine") {
  auto mass = [](const SourceDistribution& r) {
    const Interval sup = r.effective_support(1e-17);
    std::vector<double> breaks{sup.lo};
    for (double b : r.breakpoints())
      if (b > sup.lo && b < sup.hi) breaks.push_back(b);
    breaks.push_back(sup.hi);
    const auto q = integrate_panels([&](double t) { return r(t); }, breaks, 1e-13, 1e-15, 2000);
    REQUIRE(q.converged);
    return q.value;
  };
  CHECK(mass(SourceDistribution::step(-4, 8)) == doctest::Approx(12.0).epsilon(1e-13));
  CHECK(mass(SourceDistribution::exp_abs()) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(mass(SourceDistribution::gaussian(1)) ==
        doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
  CHECK(mass(SourceDistribution::gaussian(0.25)) ==
        doctest::Approx(0.25 * std::sqrt(M_PI)).epsilon(1e-13));
}

TEST_CASE("custom distribution") {
  const auto c = SourceDistribution::custom([](double t) { return t * t; }, {-1, 1}, "parabola");
  CHECK(c(0.5) == 0.25);
  CHECK(c(2) == 0.0);
  CHECK(c.breakpoints().empty());
  CHECK(c.effective_support(1e-3).lo == -1);
  CHECK(c.name() == "parabola");
}
