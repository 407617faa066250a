#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace nlgreen {

/// V(phi) in the homogeneous equation -phi'' + V(phi) = 0.
struct PotentialFn {
  std::function<double(double)> v;
  std::string description;
};

struct IvpSpec {
  double phi0 = 0.0;
  double dphi0 = 0.0;
  double x_max = 1.0;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double blowup_ceiling = 1e8;
  /// Step cap, keeps dense output fine enough for finite-difference probes.
  double max_step = 0.05;

  void validate() const;
};

/// Solution of phi'' = V(phi) sampled at the accepted integrator steps.
///
/// Between nodes the solution is a quintic Hermite interpolant built from
/// phi, phi' and phi'' = V(phi), so it is twice continuously differentiable.
class SampledSolution {
 public:
  static constexpr int kInterpolationOrder = 5;

  SampledSolution(std::vector<double> nodes, std::vector<double> values,
                  std::vector<double> derivs, std::vector<double> second_derivs);

  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<double>& derivs() const noexcept { return derivs_; }
  const std::vector<double>& second_derivs() const noexcept { return second_; }
  int interpolation_order() const noexcept { return kInterpolationOrder; }
  double x_max() const noexcept { return nodes_.back(); }

  /// phi(x) for x in [0, x_max]; OutOfRange otherwise.
  double operator()(double x) const;
  double derivative(double x) const;

 private:
  std::size_t locate(double x) const;

  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<double> derivs_;
  std::vector<double> second_;
};

/// Integrates phi'' = V(phi) on [0, x_max] with the Dormand-Prince 5(4) pair and a
/// PI step-size controller. Throws BlowUp once |phi| exceeds the ceiling and
/// StepUnderflow if the step size collapses.
SampledSolution solve_homogeneous_ivp(const PotentialFn& potential, const IvpSpec& spec);

/// Phi(x) = phi(|x|) for |x| <= x_max: the point-source solution built from a
/// homogeneous one.
class ReflectedSolution {
 public:
  explicit ReflectedSolution(std::shared_ptr<const SampledSolution> sol) : sol_(std::move(sol)) {}

  double operator()(double x) const;
  const SampledSolution& base() const noexcept { return *sol_; }

 private:
  std::shared_ptr<const SampledSolution> sol_;
};

ReflectedSolution reflect(SampledSolution sol);
ReflectedSolution reflect(std::shared_ptr<const SampledSolution> sol);

}  // namespace nlgreen
