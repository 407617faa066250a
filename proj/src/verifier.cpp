#include "nlgreen/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nlgreen/errors.hpp"
#include "nlgreen/solutions.hpp"

namespace nlgreen {

EquationSpec EquationSpec::cubic_minus(const ModelParams& p) {
  return {EquationKind::CubicMinus, p, {}};
}

EquationSpec EquationSpec::cubic_plus(const ModelParams& p) {
  return {EquationKind::CubicPlus, p, {}};
}

EquationSpec EquationSpec::linear(const ModelParams& p) { return {EquationKind::Linear, p, {}}; }

EquationSpec EquationSpec::generic_v(PotentialFn v) {
  if (!v.v) throw Error(ErrorCode::InvalidArgument, "generic equation needs V");
  return {EquationKind::Generic, {}, std::move(v)};
}

EquationSpec EquationSpec::for_kernel(const KernelSpec& kernel) {
  switch (kernel.kind) {
    case KernelKind::LinearExp: return linear(kernel.params);
    case KernelKind::TanhCubic: return cubic_minus(kernel.params);
    case KernelKind::TanCubic: return cubic_plus(kernel.params);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown kernel kind");
}

double EquationSpec::potential(double phi) const {
  const double lam = params.lambda();
  switch (kind) {
    case EquationKind::CubicMinus: return -params.mu() * params.mu() * phi + lam * phi * phi * phi;
    case EquationKind::CubicPlus: return params.m() * params.m() * phi + lam * phi * phi * phi;
    case EquationKind::Linear: return params.k() * params.k() * phi;
    case EquationKind::Generic: return generic.v(phi);
  }
  return 0.0;
}

std::string EquationSpec::name() const {
  switch (kind) {
    case EquationKind::CubicMinus: return "cubic-minus";
    case EquationKind::CubicPlus: return "cubic-plus";
    case EquationKind::Linear: return "linear";
    case EquationKind::Generic: return generic.description.empty() ? "generic" : generic.description;
  }
  return "unknown";
}

double fd_residual(const ScalarFn& sol, const EquationSpec& eq, double x, double h,
                   Stencil stencil, std::span<const double> singular) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "h must be positive");
  for (double s : singular) {
    if (std::abs(x - s) < 4.0 * h) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "stencil at x=" << x << " with h=" << h << " is within 4h of the singular point "
          << s;
      throw Error(ErrorCode::TooCloseToKink, msg.str());
    }
  }
  try {
    const double f0 = sol(x);
    double second;
    if (stencil == Stencil::ThreePoint) {
      second = (sol(x + h) - 2.0 * f0 + sol(x - h)) / (h * h);
    } else {
      second = (-sol(x + 2 * h) + 16.0 * sol(x + h) - 30.0 * f0 + 16.0 * sol(x - h) -
                sol(x - 2 * h)) /
               (12.0 * h * h);
    }
    return -second + eq.potential(f0);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PoleProximity) throw;
    throw Error(ErrorCode::TooCloseToKink, e.what());
  }
}

std::vector<double> default_jump_steps() { return {1e-2, 5e-3, 2.5e-3, 1.25e-3, 6.25e-4}; }

double measure_jump(const ScalarFn& sol, std::span<const double> eps, double at, double tol) {
  if (eps.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two steps");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] >= 1e-6)) throw Error(ErrorCode::InvalidArgument, "steps must be >= 1e-6");
    if (i > 0 && !(eps[i] < eps[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "steps must be strictly decreasing");
    }
  }
  const double f0 = sol(at);
  // Neville's scheme: extrapolate the polynomial through (e_i, J(e_i)) to e = 0.
  const std::size_t n = eps.size();
  std::vector<double> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double e = eps[i];
    table[i] = (sol(at + e) - 2.0 * f0 + sol(at - e)) / e;
  }
  double previous = table[0];
  double current = table[0];
  for (std::size_t i = 1; i < n; ++i) {
    // Row i folds sample i into the diagonal; table[0] becomes the estimate
    // built from samples 0..i.
    for (std::size_t j = i; j-- > 0;) {
      table[j] = (eps[i] * table[j] - eps[j] * table[j + 1]) / (eps[i] - eps[j]);
    }
    previous = current;
    current = table[0];
  }
  if (std::abs(current - previous) > tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "jump extrapolants disagree: " << previous << " vs " << current;
    throw Error(ErrorCode::NonConvergence, msg.str());
  }
  return current;
}

VerificationReport verify_solution(const ScalarFn& sol, const EquationSpec& eq,
                                   std::span<const double> grid, double expected_strength,
                                   const VerifyOptions& opts) {
  VerificationReport report;
  report.residual_tol = opts.residual_tol;
  report.strength_tol = opts.strength_tol;
  report.expected_strength = expected_strength;

  std::vector<double> singular{opts.source_point};
  singular.insert(singular.end(), opts.poles.begin(), opts.poles.end());
  for (double x : grid) {
    const bool near_pole = std::any_of(opts.poles.begin(), opts.poles.end(),
                                       [&](double p) { return std::abs(x - p) < opts.pole_band; });
    if (near_pole) {
      report.skipped.push_back(x);
      continue;
    }
    try {
      const double r = fd_residual(sol, eq, x, opts.h, opts.stencil, singular);
      report.residual_samples.emplace_back(x, r);
      report.max_abs_residual = std::max(report.max_abs_residual, std::abs(r));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooCloseToKink) throw;
      report.skipped.push_back(x);
    }
  }
  report.jump_estimate = measure_jump(sol, opts.jump_steps, opts.source_point);
  report.source_strength = -report.jump_estimate;
  report.residual_pass =
      !report.residual_samples.empty() && report.max_abs_residual <= opts.residual_tol;
  report.strength_pass =
      std::abs(report.source_strength - expected_strength) <= opts.strength_tol;
  return report;
}

VerificationReport green_shift_check(const KernelSpec& kernel, double x1,
                                     std::span<const double> grid, VerifyOptions opts) {
  const ScalarFn shifted = [kernel, x1](double x) { return kernel(x, x1); };
  const ScalarFn unshifted = [kernel](double x) { return kernel(x, 0.0); };
  const double reference_jump = measure_jump(unshifted, opts.jump_steps, 0.0);

  opts.source_point = x1;
  if (kernel.kind == KernelKind::TanCubic && !grid.empty()) {
    const auto [lo, hi] = std::minmax_element(grid.begin(), grid.end());
    // Asymptotes of G(., x1) in x sit where |x - x1| m / sqrt 2 = pi/2 + n pi, the
    // same set pole_locations returns for source points around x1.
    const double margin = opts.pole_band + 4.0 * opts.h;
    auto poles = pole_locations(x1, kernel.params, *lo - margin, *hi + margin);
    opts.poles.insert(opts.poles.end(), poles.begin(), poles.end());
  }
  return verify_solution(shifted, EquationSpec::for_kernel(kernel), grid, -reference_jump, opts);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out;
  if (n == 0) return out;
  if (n == 1) return {lo};
  out.reserve(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out.push_back(i + 1 == n ? hi : lo + step * i);
  return out;
}

}  // namespace nlgreen
