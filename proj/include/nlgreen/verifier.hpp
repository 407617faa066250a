#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nlgreen/ode.hpp"
#include "nlgreen/params.hpp"

namespace nlgreen {

using ScalarFn = std::function<double(double)>;

enum class EquationKind {
  CubicMinus,  // -phi'' - mu^2 phi + lambda phi^3
  CubicPlus,   // -phi'' + m^2 phi + lambda phi^3
  Linear,      // -phi'' + k^2 phi
  Generic,     // -phi'' + V(phi)
};

/// Left-hand side of an equation -phi'' + V(phi) = (source).
struct EquationSpec {
  EquationKind kind = EquationKind::Linear;
  ModelParams params;
  PotentialFn generic;

  static EquationSpec cubic_minus(const ModelParams& p);
  static EquationSpec cubic_plus(const ModelParams& p);
  static EquationSpec linear(const ModelParams& p);
  static EquationSpec generic_v(PotentialFn v);
  /// Equation whose Green function is `kernel`.
  static EquationSpec for_kernel(const KernelSpec& kernel);

  /// V(phi), the non-derivative part.
  double potential(double phi) const;
  std::string name() const;
};

enum class Stencil { ThreePoint, FivePoint };

/// Central-difference estimate of -phi''(x) + V(phi(x)).
///
/// `singular` lists kinks and poles; the stencil must stay at least 4h away
/// from each of them, otherwise TooCloseToKink is thrown. A PoleProximity
/// raised by `sol` inside the stencil is reported as TooCloseToKink too.
double fd_residual(const ScalarFn& sol, const EquationSpec& eq, double x, double h,
                   Stencil stencil = Stencil::ThreePoint, std::span<const double> singular = {});

/// The default step sequence for measure_jump.
std::vector<double> default_jump_steps();

/// Phi'(at+) - Phi'(at-) from the symmetric difference quotients
/// (Phi(at+e) - 2 Phi(at) + Phi(at-e)) / e, Richardson-extrapolated to e -> 0
/// over `eps` (decreasing, smallest >= 1e-6). Throws NonConvergence if the last
/// two extrapolants differ by more than `tol`.
double measure_jump(const ScalarFn& sol, std::span<const double> eps, double at = 0.0,
                    double tol = 1e-7);

struct VerifyOptions {
  double h = 1e-4;
  Stencil stencil = Stencil::ThreePoint;
  /// Kink location (the source point).
  double source_point = 0.0;
  /// Extra singular points (tan poles) to keep the stencil away from.
  std::vector<double> poles;
  /// Samples closer than this to a pole are skipped. The stencil's truncation
  /// error grows like 1/d^5 near a tan asymptote, so this is much wider than
  /// the 4h kink band.
  double pole_band = 0.5;
  std::vector<double> jump_steps = default_jump_steps();
  double residual_tol = 1e-5;
  double strength_tol = 1e-6;
};

struct VerificationReport {
  std::vector<std::pair<double, double>> residual_samples;
  std::vector<double> skipped;  // grid points inside a guard band
  double max_abs_residual = 0.0;
  double jump_estimate = 0.0;
  double source_strength = 0.0;  // always -jump_estimate
  double expected_strength = 0.0;
  double residual_tol = 0.0;
  double strength_tol = 0.0;
  bool residual_pass = false;
  bool strength_pass = false;

  /// Residual criterion only; a strength mismatch is data, not failure.
  bool pass() const noexcept { return residual_pass; }
};

VerificationReport verify_solution(const ScalarFn& sol, const EquationSpec& eq,
                                   std::span<const double> grid, double expected_strength,
                                   const VerifyOptions& opts = {});

/// Verifies G(., x1) for `kernel`: homogeneous residual away from x1 and a
/// jump at x1 equal to the unshifted point solution's jump at 0 (which becomes
/// expected_strength).
VerificationReport green_shift_check(const KernelSpec& kernel, double x1,
                                     std::span<const double> grid, VerifyOptions opts = {});

/// `n` evenly spaced points on [lo, hi] inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace nlgreen
