#include "figures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "nlgreen/errors.hpp"
#include "nlgreen/potentials.hpp"
#include "nlgreen/solutions.hpp"

namespace nlgreen::cli {

namespace {

using nlohmann::json;

std::string lambda_tag(double lambda) {
  std::ostringstream s;
  s << lambda;
  return s.str();
}

bool near_pole(double x, double x1, const ModelParams& p, double band) {
  const double reach = std::abs(x - x1) + band;
  for (double pole : pole_locations(x1, p, x1 - reach, x1 + reach)) {
    if (std::abs(x - pole) < band) return true;
  }
  return false;
}

Table sample(const std::vector<double>& xs, const std::function<std::optional<double>(double)>& f) {
  Table t{{"x", "value"}, {}};
  for (double x : xs) t.rows.push_back({x, f(x)});
  return t;
}

Table quadrature_curve(const SourceDistribution& src, const KernelSpec& kernel,
                       const std::vector<double>& xs, const QuadratureOptions& opts) {
  Table t{{"x", "value", "error_estimate"}, {}};
  for (const ProfilePoint& pt : potential_profile(src, kernel, xs, opts)) {
    if (pt.value) {
      t.rows.push_back({pt.x, *pt.value, pt.error_estimate});
      continue;
    }
    const ErrorCode code = pt.code.value_or(ErrorCode::NonConvergence);
    if (code != ErrorCode::AsymptoteInDomain && code != ErrorCode::PoleProximity) {
      throw Error(code, "x = " + format_number(pt.x) + ": " + pt.error, pt.poles);
    }
    t.rows.push_back({pt.x, std::nullopt, std::nullopt});
  }
  return t;
}

json source_json(const std::string& dist, std::optional<double> a, std::optional<double> b) {
  json j = {{"dist", dist}};
  if (a) j["a"] = *a;
  if (b) j["b"] = *b;
  return j;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"fig1",  "fig2",  "fig3",  "fig4", "fig5",
                                               "fig6a", "fig6b", "fig7a", "fig7b"};
  return ids;
}

FigureOutput build_figure(const FigureJob& job) {
  const std::string& id = job.figure_id;
  if (std::find(figure_ids().begin(), figure_ids().end(), id) == figure_ids().end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown figure '" + id + "'");
  }
  if (!(job.pole_band > 0.0)) throw Error(ErrorCode::InvalidArgument, "pole band must be positive");

  auto grid_or = [&](GridSpec def) { return job.grid.value_or(def); };
  FigureOutput fig;
  json notes = json::array();
  GridSpec grid;
  QuadratureOptions quad;

  if (id == "fig1" || id == "fig2") {
    const bool tanh = id == "fig1";
    grid = grid_or(tanh ? GridSpec{-10.0, 10.0, 401} : GridSpec{-3.0, 3.0, 601});
    const std::vector<double> lambdas =
        job.lambdas.empty() ? std::vector<double>{0.5, 1.0, 2.0, 4.0} : job.lambdas;
    const auto xs = grid.points();
    for (double lambda : lambdas) {
      FigureCurve c;
      const std::string tag = lambda_tag(lambda);
      c.file = id + "_lambda_" + tag + ".csv";
      c.label = "lambda = " + tag;
      if (tanh) {
        const ModelParams p = ModelParams::tanh_family(1.0, lambda);
        c.table = sample(xs, [&](double x) -> std::optional<double> { return eval_point_tanh(x, p); });
        c.params = {{"solution", "tanh-point"}, {"mu", 1.0}, {"lambda", lambda},
                    {"saturation", 1.0 / std::sqrt(lambda)}};
      } else {
        const ModelParams p = ModelParams::tan_family(1.0, lambda);
        c.table = sample(xs, [&](double x) -> std::optional<double> {
          if (near_pole(x, 0.0, p, job.pole_band)) return std::nullopt;
          return eval_point_tan(x, p);
        });
        c.params = {{"solution", "tan-point"}, {"m", 1.0}, {"lambda", lambda},
                    {"pole_band", job.pole_band},
                    {"first_pole", std::sqrt(2.0) * M_PI / 2.0}};
      }
      fig.curves.push_back(std::move(c));
    }
    if (!tanh) notes.push_back("mu in the caption is the tan-family parameter m");
  } else if (id == "fig3") {
    grid = grid_or({-5.0, 5.0, 501});
    const double k = job.k.value_or(1.0);
    ModelParams(1.0, 1.0, 1.0, k);  // validates k
    FigureCurve c;
    c.file = "fig3_vlin_gaussian.csv";
    c.label = "linear kernel, Gaussian source";
    c.table = sample(grid.points(),
                     [&](double x) -> std::optional<double> { return analytic_vlin_gaussian(x, k); });
    c.params = {{"kernel", "linear"}, {"k", k}, {"source", source_json("gaussian", 1.0, {})},
                {"method", "closed form (erfc)"}};
    fig.curves.push_back(std::move(c));
  } else if (id == "fig4") {
    grid = grid_or({-30.0, 30.0, 601});
    const double a = job.a.value_or(-4.0), b = job.b.value_or(8.0);
    const KernelSpec kernel{KernelKind::TanhCubic, ModelParams::tanh_family(1.0, 1.0)};
    FigureCurve c;
    c.file = "fig4_step.csv";
    c.label = "tanh kernel, step source";
    c.table = quadrature_curve(SourceDistribution::step(a, b), kernel, grid.points(), quad);
    c.params = {{"kernel", "tanh"}, {"mu", 1.0}, {"lambda", 1.0},
                {"source", source_json("step", a, b)}, {"plateau", b - a}};
    fig.curves.push_back(std::move(c));
  } else if (id == "fig5") {
    grid = grid_or({-10.0, 10.0, 401});
    const KernelSpec kernel{KernelKind::TanhCubic, ModelParams::tanh_family(1.0, 1.0)};
    const auto xs = grid.points();
    const double width = job.a.value_or(0.01);
    const double ba = 1.0, bb = job.b.value_or(1.0);
    FigureCurve e;
    e.file = "fig5_expabs.csv";
    e.label = "tanh kernel, exponential source";
    e.table = quadrature_curve(SourceDistribution::exp_abs(), kernel, xs, quad);
    e.params = {{"kernel", "tanh"}, {"mu", 1.0}, {"lambda", 1.0}, {"source", source_json("expabs", {}, {})}};
    FigureCurve g;
    g.file = "fig5_gaussian.csv";
    g.label = "tanh kernel, Gaussian source";
    g.table = quadrature_curve(SourceDistribution::gaussian(width), kernel, xs, quad);
    g.params = {{"kernel", "tanh"}, {"mu", 1.0}, {"lambda", 1.0},
                {"source", source_json("gaussian", width, {})}};
    FigureCurve bl;
    bl.file = "fig5_bell.csv";
    bl.label = "tanh kernel, bell source";
    bl.table = quadrature_curve(SourceDistribution::bell(ba, bb), kernel, xs, quad);
    bl.params = {{"kernel", "tanh"}, {"mu", 1.0}, {"lambda", 1.0},
                 {"source", source_json("bell", ba, bb)}};
    fig.curves.push_back(std::move(e));
    fig.curves.push_back(std::move(g));
    fig.curves.push_back(std::move(bl));
    notes.push_back("Gaussian width defaults to a = 0.01 (figure caption); the accompanying text "
                    "states a = b = 1. Override with --a.");
  } else if (id == "fig6a") {
    grid = grid_or({-6.0, 8.0, 1401});
    const ModelParams p = ModelParams::tan_family(1.0, 1.0);
    const double x1 = 1.0;
    FigureCurve c;
    c.file = "fig6a_green_tan.csv";
    c.label = "tan Green function, x1 = 1";
    c.table = sample(grid.points(), [&](double x) -> std::optional<double> {
      if (near_pole(x, x1, p, job.pole_band)) return std::nullopt;
      return green_tan(x, x1, p);
    });
    c.params = {{"kernel", "tan"}, {"m", 1.0}, {"lambda", 1.0}, {"x1", x1},
                {"pole_band", job.pole_band},
                {"poles", pole_locations(x1, p, grid.lo, grid.hi)}};
    fig.curves.push_back(std::move(c));
  } else if (id == "fig6b") {
    grid = grid_or({-6.0, 7.0, 1301});
    const ModelParams p = ModelParams::tan_family(1.0, 1.0);
    const double a = job.a.value_or(0.0), b = job.b.value_or(1.0);
    FigureCurve c;
    c.file = "fig6b_tan_step.csv";
    c.label = "tan kernel, step source";
    c.table = sample(grid.points(), [&](double x) -> std::optional<double> {
      try {
        return potential_tan_step(x, a, b, p);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PoleInInterval) throw;
        return std::nullopt;
      }
    });
    c.params = {{"kernel", "tan"}, {"m", 1.0}, {"lambda", 1.0}, {"source", source_json("step", a, b)},
                {"method", "closed form (log cos)"}};
    fig.curves.push_back(std::move(c));
    notes.push_back("points whose source interval contains a pole of the kernel are left empty");
  } else {  // fig7a, fig7b
    grid = grid_or({-1.2, 1.2, 241});
    const bool bell = id == "fig7a";
    const KernelSpec kernel{KernelKind::TanCubic, ModelParams::tan_family(1.0, 1.0)};
    quad.pole_policy = PolePolicy::Segment;
    quad.segment = job.segment.value_or(Interval{-1.0, 1.0});
    const double a = job.a.value_or(1.0), b = job.b.value_or(1.0);
    const SourceDistribution src =
        bell ? SourceDistribution::bell(a, b) : SourceDistribution::gaussian(a);
    FigureCurve c;
    c.file = bell ? "fig7a_tan_bell.csv" : "fig7b_tan_gaussian.csv";
    c.label = bell ? "tan kernel, bell source, segment" : "tan kernel, Gaussian source, segment";
    c.table = quadrature_curve(src, kernel, grid.points(), quad);
    c.params = {{"kernel", "tan"}, {"m", 1.0}, {"lambda", 1.0},
                {"source", bell ? source_json("bell", a, b) : source_json("gaussian", a, {})},
                {"segment", {quad.segment->lo, quad.segment->hi}}};
    fig.curves.push_back(std::move(c));
    notes.push_back("the source is integrated over the segment window only; points for which the "
                    "window contains a kernel pole are left empty");
  }

  json curves = json::array();
  for (const FigureCurve& c : fig.curves) {
    curves.push_back({{"file", c.file},
                      {"label", c.label},
                      {"columns", c.table.columns},
                      {"rows", c.table.rows.size()},
                      {"params", c.params}});
  }
  fig.manifest = {{"figure", id},
                  {"grid", {{"lo", grid.lo}, {"hi", grid.hi}, {"n", grid.n}}},
                  {"curves", curves},
                  {"notes", notes}};
  if (!quad.segment && (id == "fig4" || id == "fig5")) {
    fig.manifest["quadrature"] = {{"rel_tol", quad.rel_tol}, {"abs_tol", quad.abs_tol}};
  }
  return fig;
}

}  // namespace nlgreen::cli
