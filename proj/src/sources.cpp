#include "nlgreen/sources.hpp"

#include <cmath>
#include <sstream>

#include "nlgreen/errors.hpp"

namespace nlgreen {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void require_tolerance(double tol) {
  if (!(tol > 0.0 && tol < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "support tolerance must lie in (0, 1)");
  }
}

}  // namespace

SourceDistribution SourceDistribution::step(double a, double b) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    std::ostringstream msg;
    msg << "step distribution needs a < b, got a=" << a << " b=" << b;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  return SourceDistribution(Step{a, b});
}

SourceDistribution SourceDistribution::exp_abs() { return SourceDistribution(ExpAbs{}); }

SourceDistribution SourceDistribution::gaussian(double width) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw Error(ErrorCode::InvalidArgument, "gaussian width must be positive");
  }
  return SourceDistribution(Gaussian{width});
}

SourceDistribution SourceDistribution::bell(double a, double b) {
  if (b == 0.0 || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorCode::InvalidArgument, "bell distribution needs finite a and b != 0");
  }
  return SourceDistribution(Bell{a, b});
}

SourceDistribution SourceDistribution::unit_step01() { return SourceDistribution(UnitStep01{}); }

SourceDistribution SourceDistribution::custom(std::function<double(double)> fn, Interval support,
                                              std::string label) {
  if (!fn) throw Error(ErrorCode::InvalidArgument, "custom distribution needs a callable");
  if (!(support.lo < support.hi)) {
    throw Error(ErrorCode::InvalidArgument, "custom distribution needs a non-empty support");
  }
  return SourceDistribution(Custom{std::move(fn), support, std::move(label)});
}

double SourceDistribution::operator()(double x1) const {
  return std::visit(
      Overloaded{
          [&](const Step& s) { return (x1 >= s.a && x1 <= s.b) ? 1.0 : 0.0; },
          [&](const ExpAbs&) { return std::exp(-std::abs(x1)); },
          [&](const Gaussian& g) {
            const double t = x1 / g.width;
            return std::exp(-t * t);
          },
          [&](const Bell& b) {
            const double q = (x1 + b.a) * (x1 + b.a) + b.b * b.b;
            return 1.0 / (q * q);
          },
          [&](const UnitStep01&) { return (x1 >= 0.0 && x1 <= 1.0) ? 1.0 : 0.0; },
          [&](const Custom& c) { return c.support.contains(x1) ? c.fn(x1) : 0.0; },
      },
      kind_);
}

std::vector<double> SourceDistribution::breakpoints() const {
  return std::visit(Overloaded{
                        [](const Step& s) { return std::vector<double>{s.a, s.b}; },
                        [](const ExpAbs&) { return std::vector<double>{0.0}; },
                        [](const Gaussian&) { return std::vector<double>{}; },
                        [](const Bell&) { return std::vector<double>{}; },
                        [](const UnitStep01&) { return std::vector<double>{0.0, 1.0}; },
                        [](const Custom&) { return std::vector<double>{}; },
                    },
                    kind_);
}

Interval SourceDistribution::effective_support(double tol) const {
  require_tolerance(tol);
  return std::visit(
      Overloaded{
          [](const Step& s) { return Interval{s.a, s.b}; },
          [&](const ExpAbs&) {
            const double r = -std::log(tol);
            return Interval{-r, r};
          },
          [&](const Gaussian& g) {
            const double r = g.width * std::sqrt(-std::log(tol));
            return Interval{-r, r};
          },
          [&](const Bell& b) {
            // ((x1 + a)^2 + b^2)^2 > 1/tol
            const double r2 = 1.0 / std::sqrt(tol) - b.b * b.b;
            const double r = r2 > 0.0 ? std::sqrt(r2) : 0.0;
            return Interval{-b.a - r, -b.a + r};
          },
          [](const UnitStep01&) { return Interval{0.0, 1.0}; },
          [](const Custom& c) { return c.support; },
      },
      kind_);
}

std::string SourceDistribution::name() const {
  return std::visit(Overloaded{
                        [](const Step&) { return std::string("step"); },
                        [](const ExpAbs&) { return std::string("expabs"); },
                        [](const Gaussian&) { return std::string("gaussian"); },
                        [](const Bell&) { return std::string("bell"); },
                        [](const UnitStep01&) { return std::string("unitstep01"); },
                        [](const Custom& c) { return c.label; },
                    },
                    kind_);
}

}  // namespace nlgreen
