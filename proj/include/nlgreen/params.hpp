#pragma once

#include <string_view>

namespace nlgreen {

/// Constants of the cubic and linear equations.
///
/// `mu` and `lambda` parametrise the tanh family, `m` and `lambda` the tan
/// family, `k` the linear (modified Helmholtz) case. Every constant must be
/// strictly positive; the defaults are all 1.
class ModelParams {
 public:
  ModelParams() = default;
  ModelParams(double mu, double lambda, double m, double k);

  static ModelParams tanh_family(double mu, double lambda);
  static ModelParams tan_family(double m, double lambda);
  static ModelParams linear(double k);

  double mu() const noexcept { return mu_; }
  double lambda() const noexcept { return lambda_; }
  double m() const noexcept { return m_; }
  double k() const noexcept { return k_; }

 private:
  double mu_ = 1.0;
  double lambda_ = 1.0;
  double m_ = 1.0;
  double k_ = 1.0;
};

enum class KernelKind { LinearExp, TanhCubic, TanCubic };

std::string_view to_string(KernelKind kind) noexcept;

/// Which Green function to convolve with. `kind` selects the fields of
/// `params` that are read: k (LinearExp), mu/lambda (TanhCubic),
/// m/lambda (TanCubic).
struct KernelSpec {
  KernelKind kind = KernelKind::TanhCubic;
  ModelParams params;

  /// G(x, x1). Throws PoleProximity for TanCubic near an asymptote.
  double operator()(double x, double x1) const;

  /// sup |G|, or +inf for the tan kernel.
  double bound() const noexcept;
};

}  // namespace nlgreen
