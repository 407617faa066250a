#include "nlgreen/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nlgreen/errors.hpp"
#include "nlgreen/quadrature.hpp"
#include "nlgreen/solutions.hpp"
#include "nlgreen/special_functions.hpp"

namespace nlgreen {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr double kSqrtPi = 1.7724538509055160272981674833411;

double softplus(double t) { return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); }

double sign(double u) { return static_cast<double>((u > 0.0) - (u < 0.0)); }

std::string format_poles(const std::vector<double>& poles) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < poles.size(); ++i) out << (i ? ", " : "") << poles[i];
  return out.str();
}

// Hypergeometric families appearing in the exponential-source potential.
double f_minus(double z) { return special::hyp2f1({1.0, -kInvSqrt2, 1.0 - kInvSqrt2, z}); }
double f_plus(double z) { return special::hyp2f1({1.0, kInvSqrt2, 1.0 + kInvSqrt2, z}); }
double f_shift(double z) {
  return special::hyp2f1({1.0, 1.0 + kInvSqrt2, 2.0 + kInvSqrt2, z});
}

}  // namespace

void QuadratureOptions::validate() const {
  auto in_unit = [](double v) { return v > 0.0 && v < 1.0; };
  if (!in_unit(rel_tol) || !in_unit(abs_tol) || !in_unit(tail_tol)) {
    throw Error(ErrorCode::InvalidArgument, "quadrature tolerances must lie in (0, 1)");
  }
  if (max_subdivisions < 16) {
    throw Error(ErrorCode::InvalidArgument, "max_subdivisions must be at least 16");
  }
  if (pole_policy == PolePolicy::Segment) {
    if (!segment || !(segment->lo < segment->hi)) {
      throw Error(ErrorCode::InvalidArgument, "segment mode needs a window lo < hi");
    }
  }
}

PotentialResult potential_quadrature(const SourceDistribution& source, const KernelSpec& kernel,
                                     double x, const QuadratureOptions& opts) {
  opts.validate();
  const double bound = kernel.bound();
  const double support_tol = std::isfinite(bound) && bound > 1.0
                                 ? opts.tail_tol / bound
                                 : opts.tail_tol;
  Interval region = source.effective_support(std::min(support_tol, 0.5));
  if (opts.pole_policy == PolePolicy::Segment) {
    region.lo = std::max(region.lo, opts.segment->lo);
    region.hi = std::min(region.hi, opts.segment->hi);
  }

  PotentialResult result;
  if (!(region.lo < region.hi)) return result;

  if (kernel.kind == KernelKind::TanCubic) {
    auto poles = pole_locations(x, kernel.params, region.lo, region.hi);
    if (!poles.empty()) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "tan kernel at x=" << x << " has asymptotes inside the integration region ["
          << region.lo << ", " << region.hi << "] at x1 = " << format_poles(poles);
      throw Error(ErrorCode::AsymptoteInDomain, msg.str(), std::move(poles));
    }
  }

  std::vector<double> breaks{region.lo, region.hi};
  if (x > region.lo && x < region.hi) breaks.push_back(x);
  for (double b : source.breakpoints()) {
    if (b > region.lo && b < region.hi) breaks.push_back(b);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const auto integrand = [&](double x1) { return source(x1) * kernel(x, x1); };
  const QuadratureResult q =
      integrate_panels(integrand, breaks, opts.rel_tol, opts.abs_tol, opts.max_subdivisions);
  if (!q.converged) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "quadrature at x=" << x << " stopped with error estimate " << q.error_estimate
        << " after " << q.subdivisions << " subdivisions";
    throw Error(ErrorCode::ToleranceNotMet, msg.str());
  }

  result.value = q.value;
  result.error_estimate = q.error_estimate;
  result.subdivisions_used = q.subdivisions;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    result.segments.push_back({breaks[i], breaks[i + 1]});
  }
  return result;
}

double potential_step_tanh(double x, double a, double b, const ModelParams& p) {
  if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "step potential needs a < b");
  // sign(u) ln cosh(cu) / c = u + sign(u) (log1p(e^{-2c|u|}) - ln 2) / c; the linear
  // parts combine to b - a exactly, so large |x| loses nothing to cancellation.
  const double c = p.mu() * kInvSqrt2;
  const auto rest = [c](double u) {
    return sign(u) * (std::log1p(std::exp(-2.0 * c * std::abs(u))) - std::numbers::ln2) / c;
  };
  return p.mu() / std::sqrt(p.lambda()) * ((b - a) + rest(b - x) - rest(a - x));
}

double potential_tan_step(double x, double a, double b, const ModelParams& p) {
  if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "step potential needs a < b");
  auto poles = pole_locations(x, p, a, b);
  if (!poles.empty()) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "tan kernel at x=" << x << " has asymptotes in [" << a << ", " << b
        << "] at x1 = " << format_poles(poles);
    throw Error(ErrorCode::PoleInInterval, msg.str(), std::move(poles));
  }
  const double c = p.m() * kInvSqrt2;
  const auto antiderivative = [c](double u) {
    return -sign(u) * std::log(std::abs(std::cos(c * u))) / c;
  };
  return p.m() / std::sqrt(p.lambda()) * (antiderivative(b - x) - antiderivative(a - x));
}

double detail::v1_step_branch(int branch, double x) {
  const double lo = softplus(kSqrt2 * (x + 4.0));  // log(e^{sqrt2 (x+4)} + 1)
  const double hi = softplus(kSqrt2 * (x - 8.0));  // log(e^{sqrt2 (x-8)} + 1)
  switch (branch) {
    case 0: return kSqrt2 * (hi - lo) + 12.0;
    case 1: return kSqrt2 * (std::log(0.25) + hi + lo) - 2.0 * (x - 2.0);
    case 2: return kSqrt2 * (lo - hi) - 12.0;
    default: throw Error(ErrorCode::InvalidArgument, "v1 step branch must be 0, 1 or 2");
  }
}

double analytic_v1_step(double x) {
  if (x <= -4.0) return detail::v1_step_branch(0, x);
  if (x >= 8.0) return detail::v1_step_branch(2, x);
  return detail::v1_step_branch(1, x);
}

// The printed expression has a common prefactor in front of a long bracket.
// Here the prefactor is distributed over the bracket's terms so each term is
// O(1) and nothing overflows for moderate |x|; the terms themselves are kept
// one-for-one.
double detail::ve_exponential_branch(int branch, double x) {
  const double s2 = kSqrt2;
  const double denom = s2 + 2.0;
  switch (branch) {
    case 0: {
      // -(e^{-sqrt2 x} / (sqrt2 + 2)) [ ... ]
      const double e = std::exp(s2 * x);    // e^{sqrt2 x}
      const double em = std::exp(-s2 * x);  // e^{-sqrt2 x}
      const double ex = std::exp(x);        // e^{sqrt2 x + x} * e^{-sqrt2 x}
      const double psi_a = special::digamma(-1.0 / (2.0 * s2));
      const double psi_b = special::digamma(0.25 * (2.0 - s2));
      double bracket = 2.0 * s2 - 2.0 * s2 * ex + 4.0 - 4.0 * ex;
      bracket += -8.0 * f_minus(-e) - 4.0 * s2 * f_minus(-e);
      bracket += -2.0 * f_plus(-em) - s2 * f_plus(-em);
      bracket += -2.0 * f_plus(-e) - s2 * f_plus(-e);
      bracket += s2 * em * f_shift(-em) + s2 * e * f_shift(-e);
      bracket += 2.0 * ex * psi_a - 2.0 * s2 * ex * psi_b - 2.0 * ex * psi_b + 2.0 * s2 * ex * psi_a;
      return -bracket / denom;
    }
    case 1: {
      const double psi_c = special::digamma(1.0 / (2.0 * s2));
      const double psi_d = special::digamma(0.25 * (s2 + 2.0));
      double bracket = -2.0 - s2 + 2.0 * f_plus(-1.0) + s2 * f_plus(-1.0) - s2 * f_shift(-1.0);
      bracket += -psi_c - s2 * psi_c + psi_d + s2 * psi_d;
      return bracket / denom;
    }
    case 2: {
      // (e^{-sqrt2 x - x} / (sqrt2 + 2)) [ ... ]
      const double e = std::exp(s2 * x);
      const double em = std::exp(-s2 * x);
      const double emx = std::exp(-x);  // e^{sqrt2 x} * e^{-sqrt2 x - x}
      const double psi_c = special::digamma(1.0 / (2.0 * s2));
      const double psi_d = special::digamma(0.25 * (s2 + 2.0));
      double bracket = -4.0 * emx - 2.0 * s2 * emx;
      bracket += 2.0 * f_plus(-em) + s2 * f_plus(-em);
      bracket += -2.0 * f_plus(-e) - s2 * f_plus(-e);
      bracket += -s2 * em * f_shift(-em) + s2 * e * f_shift(-e);
      bracket += -2.0 * emx * psi_c - 2.0 * s2 * emx * psi_c + 2.0 * emx * psi_d +
                 2.0 * s2 * emx * psi_d;
      return bracket / denom;
    }
    default: throw Error(ErrorCode::InvalidArgument, "ve branch must be 0, 1 or 2");
  }
}

double analytic_ve_exponential(double x) {
  if (x < 0.0) return detail::ve_exponential_branch(0, x);
  if (x == 0.0) return detail::ve_exponential_branch(1, x);
  return detail::ve_exponential_branch(2, x);
}

double analytic_vlin_gaussian(double x, double k) {
  if (!(k > 0.0)) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  // e^{k^2/4 - kx} erfc(k/2 - x) and e^{k^2/4 + kx} erfc(x + k/2), rewritten with
  // the scaled complement so the exponentials never overflow.
  const auto term = [&](double exponent, double arg) {
    if (arg > 0.0) return std::exp(exponent - arg * arg) * special::erfcx(arg);
    return std::exp(exponent) * special::erfc(arg);
  };
  const double left = term(0.25 * k * k - k * x, 0.5 * k - x);
  const double right = term(0.25 * k * k + k * x, x + 0.5 * k);
  return kSqrtPi / (4.0 * k) * (left + right);
}

double analytic_vlin_gaussian_printed(double x, double k) {
  if (!(k > 0.0)) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  const double e2 = std::exp(2.0 * k * x);
  const double bracket = e2 * special::erf(x + 0.5 * k) - e2 + special::erf(-x + 0.5 * k) - 1.0;
  return kSqrtPi / (4.0 * k) * std::exp(-k * x + 0.25 * k * k) * bracket;
}

std::vector<ProfilePoint> potential_profile(const SourceDistribution& source,
                                            const KernelSpec& kernel, std::span<const double> grid,
                                            const QuadratureOptions& opts) {
  std::vector<ProfilePoint> out;
  out.reserve(grid.size());
  for (double x : grid) {
    ProfilePoint point;
    point.x = x;
    try {
      const PotentialResult r = potential_quadrature(source, kernel, x, opts);
      point.value = r.value;
      point.error_estimate = r.error_estimate;
    } catch (const Error& e) {
      point.error = e.what();
      point.poles = e.poles();
      point.code = e.code();
    }
    out.push_back(std::move(point));
  }
  return out;
}

}  // namespace nlgreen
