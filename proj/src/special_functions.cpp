#include "nlgreen/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "nlgreen/errors.hpp"

namespace nlgreen::special {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTwoOverSqrtPi = std::numbers::inv_sqrtpi * 2.0;
constexpr double kPi = std::numbers::pi;
constexpr double kSeriesSwitch = 1.5;

double erf_taylor(double u) {
  // erf(u) = 2/sqrt(pi) * sum (-1)^n u^(2n+1) / (n! (2n+1))
  const double u2 = u * u;
  double power = u;  // (-1)^n u^(2n+1) / n!
  double sum = u;
  for (int n = 1; n < 200; ++n) {
    power *= -u2 / n;
    const double term = power / (2 * n + 1);
    sum += term;
    if (std::abs(term) <= kEps * 0.25 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

// exp(u^2) erfc(u) for u > 0 by the continued fraction
// sqrt(pi) exp(u^2) erfc(u) = 1/(u + (1/2)/(u + 1/(u + (3/2)/(u + ...)))),
// evaluated with the modified Lentz method.
double erfcx_continued_fraction(double u) {
  constexpr double tiny = 1e-300;
  double f = u;
  double c = u;
  double d = 0.0;
  for (int n = 1; n < 5000; ++n) {
    const double an = 0.5 * n;
    d = u + an * d;
    if (std::abs(d) < tiny) d = tiny;
    c = u + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 0.5 * kEps) break;
  }
  return std::numbers::inv_sqrtpi / f;
}

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::nearbyint(v); }

bool is_integer(double v) { return v == std::nearbyint(v); }

double reciprocal_gamma(double v) {
  if (is_nonpositive_integer(v)) return 0.0;
  return 1.0 / std::tgamma(v);
}

constexpr int kSeriesCap = 200000;

// Plain Gauss series; requires |z| < 1 (or a terminating series).
double gauss_series(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < kSeriesCap; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) <= 0.5 * kEps * std::abs(sum)) {
      // Require a second small term so a chance cancellation cannot stop early.
      const double next = term * (a + n + 1) * (b + n + 1) / ((c + n + 1) * (n + 2.0)) * z;
      if (std::abs(next) <= 0.5 * kEps * std::abs(sum)) return sum + next;
    }
  }
  std::ostringstream msg;
  msg << "2F1 series did not converge for a=" << a << " b=" << b << " c=" << c << " z=" << z;
  throw Error(ErrorCode::NonConvergence, msg.str());
}

void validate(const Hyp2F1Args& args) {
  if (!std::isfinite(args.a) || !std::isfinite(args.b) || !std::isfinite(args.c) ||
      !std::isfinite(args.z)) {
    throw Error(ErrorCode::DomainError, "2F1 arguments must be finite");
  }
  if (is_nonpositive_integer(args.c)) {
    throw Error(ErrorCode::DomainError, "2F1 parameter c must not be a non-positive integer");
  }
  if (!(args.z < 1.0)) {
    throw Error(ErrorCode::DomainError, "2F1 supported only for real z < 1");
  }
}

// 2F1 for z < -1 via the 1/z connection formula; b - a must not be an integer.
double hyp2f1_reciprocal(double a, double b, double c, double z) {
  const double w = 1.0 / z;
  const double mz = -z;
  const double t1 = std::tgamma(c) * std::tgamma(b - a) * reciprocal_gamma(b) *
                    reciprocal_gamma(c - a) * std::pow(mz, -a) *
                    gauss_series(a, a - c + 1.0, a - b + 1.0, w);
  const double t2 = std::tgamma(c) * std::tgamma(a - b) * reciprocal_gamma(a) *
                    reciprocal_gamma(c - b) * std::pow(mz, -b) *
                    gauss_series(b, b - c + 1.0, b - a + 1.0, w);
  return t1 + t2;
}

}  // namespace

double erfcx(double u) {
  if (std::isnan(u)) return u;
  if (u > kSeriesSwitch) return erfcx_continued_fraction(u);
  if (u >= -kSeriesSwitch) return std::exp(u * u) * (1.0 - erf_taylor(u));
  // erfc(u) = 2 - erfc(-u) for negative u.
  return 2.0 * std::exp(u * u) - erfcx_continued_fraction(-u);
}

double erfc(double u) {
  if (std::isnan(u)) return u;
  if (u > kSeriesSwitch) {
    if (u > 27.3) return 0.0;
    return std::exp(-u * u) * erfcx_continued_fraction(u);
  }
  if (u >= -kSeriesSwitch) return 1.0 - erf_taylor(u);
  return 2.0 - erfc(-u);
}

double erf(double u) {
  if (std::isnan(u)) return u;
  const double a = std::abs(u);
  double value;
  if (a <= kSeriesSwitch) {
    value = erf_taylor(a);
  } else {
    value = 1.0 - erfc(a);
  }
  return u < 0.0 ? -value : value;
}

double digamma(double u) {
  if (std::isnan(u)) return u;
  if (is_nonpositive_integer(u)) {
    std::ostringstream msg;
    msg << "digamma has a pole at " << u;
    throw Error(ErrorCode::PoleArgument, msg.str());
  }
  if (u < 0.0) {
    // psi(1 - u) - psi(u) = pi cot(pi u)
    return digamma(1.0 - u) - kPi / std::tan(kPi * u);
  }
  double shift = 0.0;
  while (u < 10.0) {
    shift -= 1.0 / u;
    u += 1.0;
  }
  // Asymptotic expansion: ln u - 1/(2u) - sum B_2k / (2k u^2k).
  static constexpr std::array<double, 7> coeffs = {
      1.0 / 12.0,   -1.0 / 120.0,         1.0 / 252.0, -1.0 / 240.0,
      1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
  };
  const double inv2 = 1.0 / (u * u);
  double series = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) series = series * inv2 + *it;
  series *= inv2;
  return shift + std::log(u) - 0.5 / u - series;
}

double hyp2f1_series(const Hyp2F1Args& args) {
  validate(args);
  if (!(std::abs(args.z) < 1.0)) {
    throw Error(ErrorCode::DomainError, "direct 2F1 series requires |z| < 1");
  }
  return gauss_series(args.a, args.b, args.c, args.z);
}

double hyp2f1_pfaff(const Hyp2F1Args& args) {
  validate(args);
  if (args.z > 0.0) {
    throw Error(ErrorCode::DomainError, "Pfaff route is used only for z <= 0");
  }
  // 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))
  const double w = args.z / (args.z - 1.0);
  return std::pow(1.0 - args.z, -args.a) * gauss_series(args.a, args.c - args.b, args.c, w);
}

double hyp2f1(const Hyp2F1Args& args) {
  validate(args);
  if (args.z == 0.0) return 1.0;
  if (args.z > 0.0 || args.z > -0.9) return gauss_series(args.a, args.b, args.c, args.z);
  const double w = args.z / (args.z - 1.0);
  if (w > 0.9 && !is_integer(args.b - args.a)) {
    return hyp2f1_reciprocal(args.a, args.b, args.c, args.z);
  }
  return hyp2f1_pfaff(args);
}

}  // namespace nlgreen::special
