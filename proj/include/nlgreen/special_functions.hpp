#pragma once

namespace nlgreen::special {

/// Error function. Taylor series for |u| <= 1.5, continued fraction for the
/// complement beyond; absolute error below 1e-14.
double erf(double u);

/// Complementary error function 1 - erf(u), accurate in the far tail.
double erfc(double u);

/// Scaled complement exp(u^2) erfc(u); stays finite where erfc underflows.
double erfcx(double u);

/// Digamma psi(u). Non-positive integers throw PoleArgument.
double digamma(double u);

struct Hyp2F1Args {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double z = 0.0;
};

/// Gauss hypergeometric 2F1(a, b; c; z) for real z < 1.
///
/// |z| < 0.9 uses the Gauss series directly. For z <= -0.9 the Pfaff
/// transformation maps z to z/(z-1) in [0, 1); once that image exceeds 0.9
/// and b - a is not an integer, the 1/z connection formula is used instead
/// so that arguments such as -exp(40) still converge quickly.
///
/// Throws DomainError outside the supported region (z >= 1, c a non-positive
/// integer) and NonConvergence when a series exhausts its iteration cap.
double hyp2f1(const Hyp2F1Args& args);

/// The two routes individually, for cross-checking. `hyp2f1_series` requires
/// |z| < 1; `hyp2f1_pfaff` requires z <= 0.
double hyp2f1_series(const Hyp2F1Args& args);
double hyp2f1_pfaff(const Hyp2F1Args& args);

}  // namespace nlgreen::special
