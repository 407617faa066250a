#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace nlgreen {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return x >= lo && x <= hi; }
};

/// Source ("charge") distributions R(x1).
///
/// Closed descriptions rather than opaque callables, so breakpoints and
/// supports are known to the quadrature. `Custom` is the escape hatch: it
/// carries a caller-stated support but no breakpoint knowledge.
class SourceDistribution {
 public:
  struct Step { double a, b; };             // 1 on [a, b]
  struct ExpAbs {};                         // exp(-|x1|)
  struct Gaussian { double width; };        // exp(-x1^2 / width^2)
  struct Bell { double a, b; };             // 1 / ((x1 + a)^2 + b^2)^2
  struct UnitStep01 {};                     // 1 on [0, 1]
  struct Custom {
    std::function<double(double)> fn;
    Interval support;
    std::string label;
  };
  using Kind = std::variant<Step, ExpAbs, Gaussian, Bell, UnitStep01, Custom>;

  static SourceDistribution step(double a, double b);
  static SourceDistribution exp_abs();
  static SourceDistribution gaussian(double width);
  static SourceDistribution bell(double a, double b);
  static SourceDistribution unit_step01();
  static SourceDistribution custom(std::function<double(double)> fn, Interval support,
                                   std::string label = "custom");

  double operator()(double x1) const;

  /// Sorted points where R is discontinuous or kinked.
  std::vector<double> breakpoints() const;

  /// Interval outside which |R| < tol. Exact for the compact kinds.
  Interval effective_support(double tol) const;

  /// Short name as used on the command line.
  std::string name() const;

  const Kind& kind() const noexcept { return kind_; }

 private:
  explicit SourceDistribution(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

}  // namespace nlgreen
