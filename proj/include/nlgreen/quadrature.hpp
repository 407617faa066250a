#pragma once

#include <functional>
#include <span>
#include <vector>

#include "nlgreen/sources.hpp"

namespace nlgreen {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

/// Globally adaptive 21-point Gauss-Kronrod integration over the panels
/// delimited by `breaks` (sorted, first and last are the limits). The panel
/// with the largest error estimate is bisected until
/// error <= abs_tol + rel_tol * |value| or `max_subdivisions` is reached.
/// Does not throw on non-convergence; check `converged`.
QuadratureResult integrate_panels(const std::function<double(double)>& f,
                                  std::span<const double> breaks, double rel_tol, double abs_tol,
                                  int max_subdivisions);

/// One Gauss-Kronrod 21 panel: {kronrod value, |kronrod - gauss10|}.
std::pair<double, double> gauss_kronrod21(const std::function<double(double)>& f, double lo,
                                          double hi);

}  // namespace nlgreen
