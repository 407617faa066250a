#include "nlgreen/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>

namespace nlgreen {

namespace {

// Abscissae and weights of the 21-point Kronrod extension of the 10-point
// Gauss-Legendre rule (QUADPACK qk21). Odd entries of kNodes are Gauss nodes.
constexpr std::array<double, 11> kNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};

constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525159305, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};

constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

}  // namespace

std::pair<double, double> gauss_kronrod21(const std::function<double(double)>& f, double lo,
                                          double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double kronrod = kKronrodWeights[10] * f(center);
  double gauss = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double dx = half * kNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

QuadratureResult integrate_panels(const std::function<double(double)>& f,
                                  std::span<const double> breaks, double rel_tol, double abs_tol,
                                  int max_subdivisions) {
  QuadratureResult result;
  std::priority_queue<Panel> heap;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i] < breaks[i + 1])) continue;
    const auto [value, error] = gauss_kronrod21(f, breaks[i], breaks[i + 1]);
    heap.push({breaks[i], breaks[i + 1], value, error});
    result.value += value;
    result.error_estimate += error;
  }

  auto resum = [&] {
    auto copy = heap;
    result.value = 0.0;
    result.error_estimate = 0.0;
    while (!copy.empty()) {
      result.value += copy.top().value;
      result.error_estimate += copy.top().error;
      copy.pop();
    }
  };
  auto target = [&] { return abs_tol + rel_tol * std::abs(result.value); };
  while (result.error_estimate > target() && result.subdivisions < max_subdivisions) {
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    // Panels at the resolution limit cannot be refined further.
    if (!(mid > worst.lo && mid < worst.hi) ||
        worst.hi - worst.lo < 64.0 * std::numeric_limits<double>::epsilon() *
                                  std::max(std::abs(worst.lo), std::abs(worst.hi))) {
      break;
    }
    heap.pop();
    const auto [left_value, left_error] = gauss_kronrod21(f, worst.lo, mid);
    const auto [right_value, right_error] = gauss_kronrod21(f, mid, worst.hi);
    heap.push({worst.lo, mid, left_value, left_error});
    heap.push({mid, worst.hi, right_value, right_error});
    ++result.subdivisions;
    result.value += left_value + right_value - worst.value;
    result.error_estimate += left_error + right_error - worst.error;
    // Periodic exact re-summation keeps the running totals from drifting.
    if (result.subdivisions % 64 == 0) resum();
  }
  resum();
  result.error_estimate = std::max(result.error_estimate, 0.0);
  result.converged = result.error_estimate <= target();
  return result;
}

}  // namespace nlgreen
