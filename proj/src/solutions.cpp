#include "nlgreen/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nlgreen/errors.hpp"

namespace nlgreen {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << "parameter " << name << " must be positive and finite, got " << value;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
}

double guarded_tan(double arg, double guard) {
  if (tan_pole_distance(arg) < guard) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "tan argument " << arg << " lies within " << guard << " of a pole";
    throw Error(ErrorCode::PoleProximity, msg.str());
  }
  return std::tan(arg);
}

}  // namespace

ModelParams::ModelParams(double mu, double lambda, double m, double k)
    : mu_(mu), lambda_(lambda), m_(m), k_(k) {
  require_positive(mu, "mu");
  require_positive(lambda, "lambda");
  require_positive(m, "m");
  require_positive(k, "k");
}

ModelParams ModelParams::tanh_family(double mu, double lambda) {
  return ModelParams(mu, lambda, 1.0, 1.0);
}

ModelParams ModelParams::tan_family(double m, double lambda) {
  return ModelParams(1.0, lambda, m, 1.0);
}

ModelParams ModelParams::linear(double k) { return ModelParams(1.0, 1.0, 1.0, k); }

std::string_view to_string(KernelKind kind) noexcept {
  switch (kind) {
    case KernelKind::LinearExp: return "linear";
    case KernelKind::TanhCubic: return "tanh";
    case KernelKind::TanCubic: return "tan";
  }
  return "unknown";
}

double KernelSpec::operator()(double x, double x1) const {
  switch (kind) {
    case KernelKind::LinearExp: return green_linear(x, x1, params);
    case KernelKind::TanhCubic: return green_tanh(x, x1, params);
    case KernelKind::TanCubic: return green_tan(x, x1, params);
  }
  return 0.0;
}

double KernelSpec::bound() const noexcept {
  switch (kind) {
    case KernelKind::LinearExp: return 0.5 / params.k();
    case KernelKind::TanhCubic: return params.mu() / std::sqrt(params.lambda());
    case KernelKind::TanCubic: return HUGE_VAL;
  }
  return HUGE_VAL;
}

double tan_pole_distance(double arg) noexcept {
  // remainder() maps into [-pi/2, pi/2] around the nearest pole.
  return std::abs(std::remainder(arg - 0.5 * kPi, kPi));
}

double eval_phi_tanh(double x, const ModelParams& p) {
  return p.mu() / std::sqrt(p.lambda()) * std::tanh(x * p.mu() / kSqrt2);
}

double eval_psi_tan(double x, const ModelParams& p, double guard) {
  return p.m() / std::sqrt(p.lambda()) * guarded_tan(x * p.m() / kSqrt2, guard);
}

double eval_point_tanh(double x, const ModelParams& p) { return eval_phi_tanh(std::abs(x), p); }

double eval_point_tan(double x, const ModelParams& p, double guard) {
  return eval_psi_tan(std::abs(x), p, guard);
}

double eval_point_linear(double x, const ModelParams& p) { return green_linear(x, 0.0, p); }

double green_linear(double x, double x1, const ModelParams& p) {
  return std::exp(-p.k() * std::abs(x - x1)) / (2.0 * p.k());
}

double green_tanh(double x, double x1, const ModelParams& p) {
  return eval_phi_tanh(std::abs(x - x1), p);
}

double green_tan(double x, double x1, const ModelParams& p, double guard) {
  return eval_psi_tan(std::abs(x - x1), p, guard);
}

std::vector<double> pole_locations(double x, const ModelParams& p, double lo, double hi) {
  std::vector<double> poles;
  if (!(lo <= hi)) return poles;
  const double spacing = kSqrt2 * kPi / p.m();
  const double reach = std::max(std::abs(hi - x), std::abs(x - lo));
  for (int n = 0;; ++n) {
    const double offset = (0.5 + n) * spacing;
    if (offset > reach) break;
    for (double x1 : {x - offset, x + offset}) {
      if (x1 >= lo && x1 <= hi) poles.push_back(x1);
    }
  }
  std::sort(poles.begin(), poles.end());
  return poles;
}

}  // namespace nlgreen
