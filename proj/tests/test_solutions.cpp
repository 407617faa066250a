#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "nlgreen/errors.hpp"
#include "nlgreen/solutions.hpp"

using namespace nlgreen;

namespace {

const double kSqrt2 = std::numbers::sqrt2;
const double kPi = std::numbers::pi;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected nlgreen::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("model parameters reject non-positive constants") {
  CHECK_NOTHROW(ModelParams(1, 1, 1, 1));
  CHECK(code_of([] { ModelParams(0, 1, 1, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { ModelParams(1, -1, 1, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { ModelParams::tan_family(-2, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { ModelParams::linear(0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { ModelParams::linear(NAN); }) == ErrorCode::InvalidArgument);
  const ModelParams d;
  CHECK(d.mu() == 1.0);
  CHECK(d.lambda() == 1.0);
  CHECK(d.m() == 1.0);
  CHECK(d.k() == 1.0);
}

TEST_CASE("tanh solution values") {
  const ModelParams p;
  CHECK(eval_phi_tanh(0, p) == 0.0);
  // mpmath oracles (tests/oracles/generate_oracles.py)
  CHECK(eval_phi_tanh(1, p) == doctest::Approx(0.60885936501391381039).epsilon(1e-15));
  CHECK(eval_phi_tanh(20, p) == doctest::Approx(0.99999999999895929637).epsilon(1e-15));
  CHECK(std::abs(eval_phi_tanh(20, p) - 1.0) < 2e-12);
  CHECK(eval_point_tanh(2, p) == doctest::Approx(0.88838556158566054495).epsilon(1e-15));
  CHECK(eval_point_tanh(0, p) == 0.0);
  CHECK(eval_point_tanh(-1, p) == eval_point_tanh(1, p));
}

TEST_CASE("tan solution values and pole guard") {
  const ModelParams p;
  CHECK(eval_psi_tan(0, p) == 0.0);
  CHECK(eval_psi_tan(1, p) == doctest::Approx(0.85451043200960189252).epsilon(1e-15));
  CHECK(eval_point_tan(0.5, p) == doctest::Approx(0.36906060678120083707).epsilon(1e-15));
  CHECK(eval_point_tan(-1, p) == eval_point_tan(1, p));
  CHECK(code_of([&] { eval_psi_tan(kSqrt2 * kPi / 2, p); }) == ErrorCode::PoleProximity);
  CHECK(code_of([&] { eval_point_tan(2.2214414690791831, p); }) == ErrorCode::PoleProximity);
  CHECK(code_of([&] { eval_point_tan(-kSqrt2 * 3 * kPi / 2, p); }) == ErrorCode::PoleProximity);
  // Just outside the guard band the value is large but returned.
  const double near = kSqrt2 * (kPi / 2 - 1e-6);
  CHECK(eval_psi_tan(near, p) > 1e5);
  // The spec's rounded 2.2214 is 4.4e-5 away from the pole, outside the 1e-8
  // band; with a wider guard it is rejected.
  CHECK(code_of([&] { eval_point_tan(2.2214, p, 1e-4); }) == ErrorCode::PoleProximity);
}

TEST_CASE("linear Green function") {
  const ModelParams k1 = ModelParams::linear(1);
  const ModelParams k2 = ModelParams::linear(2);
  CHECK(green_linear(0, 0, k1) == 0.5);
  CHECK(green_linear(1.5, 1, k2) == doctest::Approx(0.091969860292860580399).epsilon(1e-15));
  CHECK(green_linear(0.3, -2.0, k2) == green_linear(-2.0, 0.3, k2));
  CHECK(eval_point_linear(0, k1) == 0.5);
  CHECK(eval_point_linear(1, k1) == doctest::Approx(0.1839397205857211608).epsilon(1e-15));
  CHECK(eval_point_linear(-1.7, k1) == eval_point_linear(1.7, k1));
}

TEST_CASE("nonlinear Green functions") {
  const ModelParams p;
  CHECK(green_tanh(1, 1, p) == 0.0);
  CHECK(green_tanh(2, 1, p) == doctest::Approx(0.60885936501391381039).epsilon(1e-15));
  CHECK(green_tanh(0, 3, p) == green_tanh(3, 0, p));
  CHECK(green_tan(1, 1, p) == 0.0);
  CHECK(green_tan(2, 1, p) == doctest::Approx(0.85451043200960189252).epsilon(1e-15));
  CHECK(code_of([&] { green_tan(1 + kSqrt2 * kPi / 2, 1, p); }) == ErrorCode::PoleProximity);
}

TEST_CASE("pole locations") {
  const ModelParams p;
  const auto poles = pole_locations(0, p, -10, 10);
  REQUIRE(poles.size() == 4);
  CHECK(poles[0] == doctest::Approx(-6.6643244072375493705).epsilon(1e-15));
  CHECK(poles[1] == doctest::Approx(-2.2214414690791831235).epsilon(1e-15));
  CHECK(poles[2] == doctest::Approx(2.2214414690791831235).epsilon(1e-15));
  CHECK(poles[3] == doctest::Approx(6.6643244072375493705).epsilon(1e-15));
  CHECK(pole_locations(0, p, -1, 1).empty());
  const auto shifted = pole_locations(5, p, 0, 6);
  REQUIRE(shifted.size() == 1);
  CHECK(shifted[0] == doctest::Approx(5 - 2.2214414690791831235).epsilon(1e-15));
  // m scales the spacing.
  const auto m2 = pole_locations(0, ModelParams::tan_family(2, 1), 0, 4);
  REQUIRE(m2.size() == 2);
  CHECK(m2[0] == doctest::Approx(2.2214414690791831235 / 2).epsilon(1e-15));
  CHECK(pole_locations(0, p, 1, -1).empty());
}

TEST_CASE("properties on random samples") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> xs(-25, 25);
  std::uniform_real_distribution<double> ps(0.1, 5);
  for (int i = 0; i < 2000; ++i) {
    const double x = xs(rng);
    const double c = xs(rng);
    const ModelParams p(ps(rng), ps(rng), ps(rng), ps(rng));
    // evenness is exact
    CHECK(eval_point_tanh(-x, p) == eval_point_tanh(x, p));
    CHECK(eval_point_linear(-x, p) == eval_point_linear(x, p));
    // scaling
    CHECK(eval_phi_tanh(x, p) * std::sqrt(p.lambda()) / p.mu() ==
          doctest::Approx(std::tanh(x * p.mu() / kSqrt2)).epsilon(1e-15));
    // bound
    CHECK(std::abs(eval_phi_tanh(x, p)) <= p.mu() / std::sqrt(p.lambda()));
    // translation invariance (up to rounding in x - x1)
    CHECK(green_tanh(x + c, 0.5 + c, p) == doctest::Approx(green_tanh(x, 0.5, p)).epsilon(1e-12));
    CHECK(green_linear(x + c, 0.5 + c, p) ==
          doctest::Approx(green_linear(x, 0.5, p)).epsilon(1e-12).scale(1e-300));
    try {
      const double t = eval_point_tan(x, p);
      CHECK(eval_point_tan(-x, p) == t);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PoleProximity);
    }
  }
  // Strict bound for moderate arguments.
  CHECK(std::abs(eval_phi_tanh(5, ModelParams())) < 1.0);
}

TEST_CASE("kernel spec dispatch") {
  const KernelSpec lin{KernelKind::LinearExp, ModelParams::linear(2)};
  const KernelSpec th{KernelKind::TanhCubic, ModelParams::tanh_family(2, 4)};
  const KernelSpec tn{KernelKind::TanCubic, ModelParams::tan_family(1, 1)};
  CHECK(lin(0.4, 0.1) == green_linear(0.4, 0.1, lin.params));
  CHECK(th(0.4, 0.1) == green_tanh(0.4, 0.1, th.params));
  CHECK(tn(0.4, 0.1) == green_tan(0.4, 0.1, tn.params));
  CHECK(lin.bound() == 0.25);
  CHECK(th.bound() == 1.0);
  CHECK(std::isinf(tn.bound()));
}
