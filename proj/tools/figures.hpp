#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "output.hpp"

namespace nlgreen::cli {

struct FigureJob {
  std::string figure_id;
  std::optional<GridSpec> grid;
  std::vector<double> lambdas;  // fig1/fig2; empty means {0.5, 1, 2, 4}
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> k;
  std::optional<Interval> segment;
  /// Points whose tan argument lies within this distance of a pole are left
  /// empty so plots show the asymptotes as gaps.
  double pole_band = 0.02;
};

struct FigureCurve {
  std::string file;
  std::string label;
  Table table;
  nlohmann::json params;
};

struct FigureOutput {
  std::vector<FigureCurve> curves;
  nlohmann::json manifest;
};

const std::vector<std::string>& figure_ids();

/// Throws nlgreen::Error(InvalidArgument) for an unknown id or bad overrides.
FigureOutput build_figure(const FigureJob& job);

}  // namespace nlgreen::cli
