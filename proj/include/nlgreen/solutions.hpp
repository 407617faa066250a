#pragma once

#include <vector>

#include "nlgreen/params.hpp"

namespace nlgreen {

/// Arguments of tan closer than this to pi/2 + n*pi are rejected.
inline constexpr double kPoleGuard = 1e-8;

// Homogeneous solutions.

/// (mu/sqrt(lambda)) tanh(x mu / sqrt 2); solves -phi'' - mu^2 phi + lambda phi^3 = 0.
double eval_phi_tanh(double x, const ModelParams& p);

/// (m/sqrt(lambda)) tan(x m / sqrt 2); solves -psi'' + m^2 psi + lambda psi^3 = 0.
/// Throws PoleProximity within `guard` of an asymptote of the tan argument.
double eval_psi_tan(double x, const ModelParams& p, double guard = kPoleGuard);

// Point-source solutions, phi(|x|).

double eval_point_tanh(double x, const ModelParams& p);
double eval_point_tan(double x, const ModelParams& p, double guard = kPoleGuard);
double eval_point_linear(double x, const ModelParams& p);

// Green functions. All three depend on |x - x1| only.

double green_linear(double x, double x1, const ModelParams& p);
/// Zero at x == x1; the derivative kink there is what carries the source.
double green_tanh(double x, double x1, const ModelParams& p);
double green_tan(double x, double x1, const ModelParams& p, double guard = kPoleGuard);

/// Distance from `arg` to the nearest pole pi/2 + n*pi of tan.
double tan_pole_distance(double arg) noexcept;

/// Sorted source points x1 in [lo, hi] at which green_tan(x, x1) has a vertical
/// asymptote, i.e. |x - x1| m / sqrt 2 = pi/2 + n pi for n >= 0.
std::vector<double> pole_locations(double x, const ModelParams& p, double lo, double hi);

}  // namespace nlgreen
