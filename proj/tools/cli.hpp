#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nlgreen/sources.hpp"

namespace nlgreen::cli {

enum ExitCode : int {
  kOk = 0,
  kBadArguments = 2,
  kPoleOrDomain = 3,
  kToleranceFailure = 4,
};

/// lo:hi:n, n >= 2 and lo < hi.
struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  int n = 2;

  std::vector<double> points() const;
  std::string to_string() const;
};

GridSpec parse_grid(const std::string& text);
Interval parse_segment(const std::string& text);
std::vector<double> parse_list(const std::string& text);

/// Runs the command line `args` (without the program name). Data goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlgreen::cli
