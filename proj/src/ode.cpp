#include "nlgreen/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "nlgreen/errors.hpp"

namespace nlgreen {

namespace {

using State = std::array<double, 2>;  // {phi, phi'}

// Dormand-Prince 5(4) tableau. The system is autonomous, so the nodes c_i are unused.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b - b_hat
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

double checked_v(const PotentialFn& potential, double phi) {
  const double v = potential.v(phi);
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg << "V(" << phi << ") is not finite";
    throw Error(ErrorCode::BlowUp, msg.str());
  }
  return v;
}

}  // namespace

void IvpSpec::validate() const {
  if (!(x_max > 0.0) || !std::isfinite(x_max)) {
    throw Error(ErrorCode::InvalidArgument, "x_max must be positive");
  }
  if (!(rel_tol > 0.0 && rel_tol < 1.0) || !(abs_tol > 0.0 && abs_tol < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "IVP tolerances must lie in (0, 1)");
  }
  if (!(blowup_ceiling > 0.0) || !(max_step > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "blow-up ceiling and max step must be positive");
  }
  if (!std::isfinite(phi0) || !std::isfinite(dphi0)) {
    throw Error(ErrorCode::InvalidArgument, "initial conditions must be finite");
  }
}

SampledSolution::SampledSolution(std::vector<double> nodes, std::vector<double> values,
                                 std::vector<double> derivs, std::vector<double> second_derivs)
    : nodes_(std::move(nodes)),
      values_(std::move(values)),
      derivs_(std::move(derivs)),
      second_(std::move(second_derivs)) {
  const std::size_t n = nodes_.size();
  if (n < 2 || values_.size() != n || derivs_.size() != n || second_.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "sampled solution arrays must match, length >= 2");
  }
  if (nodes_.front() != 0.0) throw Error(ErrorCode::InvalidArgument, "first node must be 0");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(nodes_[i] > nodes_[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "nodes must be strictly increasing");
    }
  }
}

std::size_t SampledSolution::locate(double x) const {
  if (!(x >= 0.0 && x <= nodes_.back())) {
    std::ostringstream msg;
    msg << "x=" << x << " outside sampled range [0, " << nodes_.back() << "]";
    throw Error(ErrorCode::OutOfRange, msg.str());
  }
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  const auto idx = static_cast<std::size_t>(it - nodes_.begin());
  return std::min(idx == 0 ? 0 : idx - 1, nodes_.size() - 2);
}

double SampledSolution::operator()(double x) const {
  const std::size_t i = locate(x);
  const double h = nodes_[i + 1] - nodes_[i];
  const double t = (x - nodes_[i]) / h;
  const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
  // Quintic Hermite basis on [0, 1].
  const double h00 = 1 - 10 * t3 + 15 * t4 - 6 * t5;
  const double h10 = t - 6 * t3 + 8 * t4 - 3 * t5;
  const double h20 = 0.5 * t2 - 1.5 * t3 + 1.5 * t4 - 0.5 * t5;
  const double h01 = 10 * t3 - 15 * t4 + 6 * t5;
  const double h11 = -4 * t3 + 7 * t4 - 3 * t5;
  const double h21 = 0.5 * t3 - t4 + 0.5 * t5;
  return h00 * values_[i] + h * h10 * derivs_[i] + h * h * h20 * second_[i] +
         h01 * values_[i + 1] + h * h11 * derivs_[i + 1] + h * h * h21 * second_[i + 1];
}

double SampledSolution::derivative(double x) const {
  const std::size_t i = locate(x);
  const double h = nodes_[i + 1] - nodes_[i];
  const double t = (x - nodes_[i]) / h;
  const double t2 = t * t, t3 = t2 * t, t4 = t3 * t;
  const double d00 = -30 * t2 + 60 * t3 - 30 * t4;
  const double d10 = 1 - 18 * t2 + 32 * t3 - 15 * t4;
  const double d20 = t - 4.5 * t2 + 6 * t3 - 2.5 * t4;
  const double d01 = 30 * t2 - 60 * t3 + 30 * t4;
  const double d11 = -12 * t2 + 28 * t3 - 15 * t4;
  const double d21 = 1.5 * t2 - 4 * t3 + 2.5 * t4;
  return (d00 * values_[i] + d01 * values_[i + 1]) / h + d10 * derivs_[i] +
         d11 * derivs_[i + 1] + h * (d20 * second_[i] + d21 * second_[i + 1]);
}

SampledSolution solve_homogeneous_ivp(const PotentialFn& potential, const IvpSpec& spec) {
  spec.validate();
  if (!potential.v) throw Error(ErrorCode::InvalidArgument, "potential callable is empty");

  const auto rhs = [&](const State& y) { return State{y[1], checked_v(potential, y[0])}; };

  std::vector<double> nodes{0.0};
  std::vector<double> values{spec.phi0};
  std::vector<double> derivs{spec.dphi0};
  std::vector<double> second{checked_v(potential, spec.phi0)};

  State y{spec.phi0, spec.dphi0};
  State k1 = rhs(y);
  double x = 0.0;
  double h = std::min(spec.max_step, 1e-3 * spec.x_max);
  double prev_err = 1e-4;
  constexpr double safety = 0.9, alpha = 0.7 / 5.0, beta = 0.4 / 5.0;
  constexpr double min_factor = 0.2, max_factor = 5.0;

  while (x < spec.x_max) {
    const bool last = x + h >= spec.x_max;
    const double step = last ? spec.x_max - x : h;
    if (step < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
      std::ostringstream msg;
      msg << "step size underflow at x=" << x;
      throw Error(ErrorCode::StepUnderflow, msg.str());
    }

    auto at = [&](std::initializer_list<std::pair<double, const State*>> terms) {
      State s = y;
      for (const auto& [coef, k] : terms) {
        s[0] += step * coef * (*k)[0];
        s[1] += step * coef * (*k)[1];
      }
      return s;
    };
    const State k2 = rhs(at({{a21, &k1}}));
    const State k3 = rhs(at({{a31, &k1}, {a32, &k2}}));
    const State k4 = rhs(at({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = rhs(at({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 = rhs(at({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State y_new = at({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = rhs(y_new);

    double err = 0.0;
    for (int j = 0; j < 2; ++j) {
      const double e = step * (e1 * k1[j] + e3 * k3[j] + e4 * k4[j] + e5 * k5[j] + e6 * k6[j] +
                               e7 * k7[j]);
      const double scale =
          spec.abs_tol + spec.rel_tol * std::max(std::abs(y[j]), std::abs(y_new[j]));
      err = std::max(err, std::abs(e) / scale);
    }

    if (err <= 1.0) {
      x = last ? spec.x_max : x + step;
      y = y_new;
      k1 = k7;
      nodes.push_back(x);
      values.push_back(y[0]);
      derivs.push_back(y[1]);
      second.push_back(k7[1]);
      if (!(std::abs(y[0]) <= spec.blowup_ceiling)) {
        std::ostringstream msg;
        msg << "|phi| exceeded " << spec.blowup_ceiling << " at x=" << x;
        throw Error(ErrorCode::BlowUp, msg.str());
      }
      const double factor =
          std::clamp(safety * std::pow(std::max(err, 1e-10), -alpha) * std::pow(prev_err, beta),
                     min_factor, max_factor);
      prev_err = std::max(err, 1e-4);
      h = std::min(step * factor, spec.max_step);
    } else {
      h = step * std::max(min_factor, safety * std::pow(err, -alpha));
    }
  }
  return SampledSolution(std::move(nodes), std::move(values), std::move(derivs),
                         std::move(second));
}

double ReflectedSolution::operator()(double x) const { return (*sol_)(std::abs(x)); }

ReflectedSolution reflect(SampledSolution sol) {
  return ReflectedSolution(std::make_shared<const SampledSolution>(std::move(sol)));
}

ReflectedSolution reflect(std::shared_ptr<const SampledSolution> sol) {
  if (!sol) throw Error(ErrorCode::InvalidArgument, "null solution");
  return ReflectedSolution(std::move(sol));
}

}  // namespace nlgreen
