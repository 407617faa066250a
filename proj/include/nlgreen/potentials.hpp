#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlgreen/errors.hpp"
#include "nlgreen/params.hpp"
#include "nlgreen/sources.hpp"

namespace nlgreen {

enum class PolePolicy {
  Reject,   // error if a tan asymptote lies in the integration region
  Segment,  // integrate only over QuadratureOptions::segment
};

struct QuadratureOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_subdivisions = 4000;
  double tail_tol = 1e-16;
  PolePolicy pole_policy = PolePolicy::Reject;
  /// Source-coordinate window for PolePolicy::Segment.
  std::optional<Interval> segment;

  /// Throws InvalidArgument if tolerances are outside (0, 1), fewer than 16
  /// subdivisions are allowed, or Segment mode lacks a window.
  void validate() const;
};

struct PotentialResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions_used = 0;
  /// Top-level panels, split at the kernel kink and the source breakpoints.
  std::vector<Interval> segments;
};

/// V(x) = integral of R(x1) G(x, x1) dx1 by adaptive Gauss-Kronrod quadrature.
///
/// The region is the effective support of R (tails cut where the integrand
/// bound drops below `tail_tol`), intersected with the segment window in
/// Segment mode. Panels are split at x and at R's breakpoints. Throws
/// AsymptoteInDomain (with the pole coordinates) when a tan pole falls in the
/// region, ToleranceNotMet when `max_subdivisions` is exhausted.
PotentialResult potential_quadrature(const SourceDistribution& source, const KernelSpec& kernel,
                                     double x, const QuadratureOptions& opts = {});

/// Closed form of the tanh kernel over a unit step on [a, b], via the
/// antiderivative sign(u) ln cosh(c u) / c of tanh(c |u|).
double potential_step_tanh(double x, double a, double b, const ModelParams& p = {});

/// Three-branch step potential for R = 1 on [-4, 8], mu = lambda = 1, as
/// listed in closed form. Logarithms of (e^t + 1) are evaluated as softplus
/// so large |x| does not overflow.
double analytic_v1_step(double x);

/// Exponential-source potential with R = exp(-|x1|), mu = lambda = 1, written
/// in terms of 2F1 and digamma; each of the three branches (x < 0, x == 0,
/// x > 0) is evaluated as printed.
double analytic_ve_exponential(double x);

/// Linear-kernel Gaussian potential for R = exp(-x1^2):
/// sqrt(pi)/(4k) e^{k^2/4} [e^{-kx}(1 + erf(x - k/2)) + e^{kx} erfc(x + k/2)].
double analytic_vlin_gaussian(double x, double k);

/// The same potential with the bracket exactly as originally printed, which
/// evaluates to the negative of the integral. Kept for regression tests.
double analytic_vlin_gaussian_printed(double x, double k);

/// Closed form of the tan kernel over a unit step on [a, b], via the
/// antiderivative -sign(u) ln|cos(c u)| / c of tan(c |u|). Throws
/// PoleInInterval (with the pole coordinates) if an asymptote of G(x, .)
/// lies in [a, b].
double potential_tan_step(double x, double a, double b, const ModelParams& p = {});

struct ProfilePoint {
  double x = 0.0;
  std::optional<double> value;  // absent for pole-guard points and failures
  double error_estimate = 0.0;
  std::string error;            // empty unless evaluation failed
  std::vector<double> poles;    // pole coordinates when the failure was a pole
  std::optional<ErrorCode> code;
};

/// potential_quadrature over a grid. Per-point failures are recorded, not
/// thrown; output order follows the grid.
std::vector<ProfilePoint> potential_profile(const SourceDistribution& source,
                                            const KernelSpec& kernel, std::span<const double> grid,
                                            const QuadratureOptions& opts = {});

}  // namespace nlgreen

namespace nlgreen::detail {

/// Individual branches of analytic_v1_step: 0 for x <= -4, 1 for -4 <= x <= 8,
/// 2 for x >= 8. Any branch may be evaluated at any x (continuity checks).
double v1_step_branch(int branch, double x);

/// Individual branches of analytic_ve_exponential: 0 for x < 0, 1 for x == 0
/// (x is ignored), 2 for x > 0.
double ve_exponential_branch(int branch, double x);

}  // namespace nlgreen::detail
