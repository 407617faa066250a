#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "figures.hpp"
#include "json.hpp"
#include "nlgreen/errors.hpp"
#include "nlgreen/ode.hpp"
#include "nlgreen/potentials.hpp"
#include "nlgreen/solutions.hpp"
#include "nlgreen/verifier.hpp"
#include "output.hpp"

namespace nlgreen::cli {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidArgument, msg); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double to_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    bad("cannot parse " + what + " '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) bad("cannot parse " + what + " '" + s + "'");
  return v;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return kBadArguments;
    case ErrorCode::PoleProximity:
    case ErrorCode::PoleInInterval:
    case ErrorCode::AsymptoteInDomain:
    case ErrorCode::DomainError:
    case ErrorCode::PoleArgument:
    case ErrorCode::OutOfRange:
    case ErrorCode::TooCloseToKink:
      return kPoleOrDomain;
    case ErrorCode::ToleranceNotMet:
    case ErrorCode::NonConvergence:
    case ErrorCode::StepUnderflow:
    case ErrorCode::BlowUp:
      return kToleranceFailure;
  }
  return kBadArguments;
}

bool is_pole_error(ErrorCode code) {
  return code == ErrorCode::PoleProximity || code == ErrorCode::PoleInInterval ||
         code == ErrorCode::AsymptoteInDomain;
}

std::string format_poles(const std::vector<double>& poles) {
  std::string s;
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (i) s += ", ";
    s += format_number(poles[i]);
  }
  return s;
}

void write_table(const Table& t, const std::string& format, const std::string& path,
                 std::ostream& out) {
  if (format == "json") {
    emit(table_to_json(t).dump(2) + "\n", path, out);
  } else {
    emit(csv_string(t), path, out);
  }
}

struct CommonParams {
  double mu = 1.0;
  double lambda = 1.0;
  double m = 1.0;
  double k = 1.0;

  ModelParams model() const { return ModelParams(mu, lambda, m, k); }
};

void add_model_flags(CLI::App* app, CommonParams& p) {
  app->add_option("--mu", p.mu, "mu (tanh family)");
  app->add_option("--lambda", p.lambda, "lambda (cubic coupling)");
  app->add_option("--m", p.m, "m (tan family)");
  app->add_option("--k", p.k, "k (linear equation)");
}

json report_json(const VerificationReport& r) {
  json samples = json::array();
  for (const auto& [x, res] : r.residual_samples) samples.push_back({x, res});
  return {
      {"residual_samples", samples},
      {"skipped", r.skipped},
      {"max_abs_residual", r.max_abs_residual},
      {"jump_estimate", r.jump_estimate},
      {"source_strength", r.source_strength},
      {"expected_strength", r.expected_strength},
      {"residual_tol", r.residual_tol},
      {"strength_tol", r.strength_tol},
      {"residual_pass", r.residual_pass},
      {"strength_pass", r.strength_pass},
      {"pass", r.pass()},
  };
}

// ---- eval -------------------------------------------------------------------

struct EvalArgs {
  std::string kind;
  CommonParams params;
  double x1 = 0.0;
  double a = 0.0;
  double b = 1.0;
  bool printed_form = false;
  std::string grid = "-10:10:401";
  std::string out;
  std::string format = "csv";
};

const std::vector<std::string> kEvalKinds = {
    "phi-tanh",     "tanh-point", "psi-tan",   "tan-point", "linear-point",
    "green-linear", "green-tanh", "green-tan", "v1-step",   "ve-exponential",
    "vlin-gaussian", "step-tanh", "tan-step",
};

int cmd_eval(const EvalArgs& args, std::ostream& out) {
  const ModelParams p = args.params.model();
  const GridSpec grid = parse_grid(args.grid);
  const double x1 = args.x1;
  const double a = args.a;
  const double b = args.b;
  std::function<double(double)> f;
  const std::string& kind = args.kind;
  if (kind == "phi-tanh") f = [&](double x) { return eval_phi_tanh(x, p); };
  else if (kind == "tanh-point") f = [&](double x) { return eval_point_tanh(x, p); };
  else if (kind == "psi-tan") f = [&](double x) { return eval_psi_tan(x, p); };
  else if (kind == "tan-point") f = [&](double x) { return eval_point_tan(x, p); };
  else if (kind == "linear-point") f = [&](double x) { return eval_point_linear(x, p); };
  else if (kind == "green-linear") f = [&](double x) { return green_linear(x, x1, p); };
  else if (kind == "green-tanh") f = [&](double x) { return green_tanh(x, x1, p); };
  else if (kind == "green-tan") f = [&](double x) { return green_tan(x, x1, p); };
  else if (kind == "v1-step") f = [](double x) { return analytic_v1_step(x); };
  else if (kind == "ve-exponential") f = [](double x) { return analytic_ve_exponential(x); };
  else if (kind == "vlin-gaussian") {
    if (args.printed_form) f = [&](double x) { return analytic_vlin_gaussian_printed(x, p.k()); };
    else f = [&](double x) { return analytic_vlin_gaussian(x, p.k()); };
  } else if (kind == "step-tanh") {
    if (!(a < b)) bad("step-tanh needs --a < --b");
    f = [&](double x) { return potential_step_tanh(x, a, b, p); };
  } else if (kind == "tan-step") {
    if (!(a < b)) bad("tan-step needs --a < --b");
    f = [&](double x) { return potential_tan_step(x, a, b, p); };
  } else {
    bad("unknown eval kind '" + kind + "'");
  }

  Table t{{"x", "value"}, {}};
  for (double x : grid.points()) {
    std::optional<double> v;
    try {
      v = f(x);
    } catch (const Error& e) {
      if (!is_pole_error(e.code())) throw;
    }
    t.rows.push_back({x, v});
  }
  write_table(t, args.format, args.out, out);
  return kOk;
}

// ---- potential --------------------------------------------------------------

struct PotentialArgs {
  std::string dist = "step";
  std::optional<double> a;
  std::optional<double> b;
  std::string kernel = "tanh";
  CommonParams params;
  std::string grid = "-10:10:201";
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  std::string segment;
  std::string out;
  std::string format = "csv";
};

SourceDistribution make_source(const std::string& dist, std::optional<double> a,
                               std::optional<double> b) {
  if (dist == "step") {
    if (!a || !b) bad("--dist step needs --a and --b");
    return SourceDistribution::step(*a, *b);
  }
  if (dist == "expabs") return SourceDistribution::exp_abs();
  if (dist == "gaussian") return SourceDistribution::gaussian(a.value_or(1.0));
  if (dist == "bell") return SourceDistribution::bell(a.value_or(1.0), b.value_or(1.0));
  if (dist == "unitstep01") return SourceDistribution::unit_step01();
  bad("unknown distribution '" + dist + "'");
}

KernelSpec make_kernel(const std::string& name, const ModelParams& p) {
  if (name == "linear") return {KernelKind::LinearExp, p};
  if (name == "tanh") return {KernelKind::TanhCubic, p};
  if (name == "tan") return {KernelKind::TanCubic, p};
  bad("unknown kernel '" + name + "'");
}

int cmd_potential(const PotentialArgs& args, std::ostream& out, std::ostream& err) {
  const SourceDistribution source = make_source(args.dist, args.a, args.b);
  const KernelSpec kernel = make_kernel(args.kernel, args.params.model());
  const GridSpec grid = parse_grid(args.grid);
  QuadratureOptions opts;
  opts.rel_tol = args.rel_tol;
  opts.abs_tol = args.abs_tol;
  if (!args.segment.empty()) {
    opts.pole_policy = PolePolicy::Segment;
    opts.segment = parse_segment(args.segment);
  }
  opts.validate();

  const std::vector<double> xs = grid.points();
  const std::vector<ProfilePoint> profile = potential_profile(source, kernel, xs, opts);
  Table t{{"x", "value", "error_estimate"}, {}};
  for (const ProfilePoint& pt : profile) {
    if (!pt.value) {
      const ErrorCode code = pt.code.value_or(ErrorCode::NonConvergence);
      // Inside a segment window the only acceptable gaps are pole hits.
      if (!(opts.pole_policy == PolePolicy::Segment && is_pole_error(code))) {
        err << "error at x = " << format_number(pt.x) << ": " << pt.error << "\n";
        if (!pt.poles.empty()) err << "poles: " << format_poles(pt.poles) << "\n";
        if (code == ErrorCode::AsymptoteInDomain) {
          err << "hint: the tan kernel needs --segment lo:hi between adjacent poles\n";
        }
        return exit_code_for(code);
      }
      t.rows.push_back({pt.x, std::nullopt, std::nullopt});
    } else {
      t.rows.push_back({pt.x, *pt.value, pt.error_estimate});
    }
  }
  write_table(t, args.format, args.out, out);
  return kOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string target;
  CommonParams params;
  double x1 = 0.0;
  std::string v = "cubic-minus";
  double phi0 = 0.0;
  double dphi0 = 1.0 / std::sqrt(2.0);
  std::string grid = "-5:5:200";
  std::string out;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const ModelParams p = args.params.model();
  const GridSpec grid = parse_grid(args.grid);
  const std::vector<double> xs = grid.points();
  VerifyOptions opts;
  const double printed = 1.0;
  json extra = json::object();
  VerificationReport report;
  const std::string& target = args.target;

  if (target == "linear-point") {
    report = verify_solution([&](double x) { return eval_point_linear(x, p); },
                             EquationSpec::linear(p), xs, 1.0, opts);
  } else if (target == "tanh-point") {
    report = verify_solution([&](double x) { return eval_point_tanh(x, p); },
                             EquationSpec::cubic_minus(p), xs,
                             -std::sqrt(2.0) * p.mu() * p.mu() / std::sqrt(p.lambda()), opts);
  } else if (target == "tan-point") {
    const double lo = std::min(xs.front(), -1.0), hi = std::max(xs.back(), 1.0);
    opts.poles = pole_locations(0.0, p, lo, hi);
    report = verify_solution([&](double x) { return eval_point_tan(x, p); },
                             EquationSpec::cubic_plus(p), xs,
                             -std::sqrt(2.0) * p.m() * p.m() / std::sqrt(p.lambda()), opts);
  } else if (target == "green-linear" || target == "green-tanh" || target == "green-tan") {
    const KernelKind kind = target == "green-linear" ? KernelKind::LinearExp
                            : target == "green-tanh" ? KernelKind::TanhCubic
                                                     : KernelKind::TanCubic;
    std::vector<double> shifted(xs);
    for (double& x : shifted) x += args.x1;
    report = green_shift_check(KernelSpec{kind, p}, args.x1, shifted, opts);
    extra["x1"] = args.x1;
  } else if (target == "generic") {
    PotentialFn v;
    const std::string& name = args.v;
    EquationSpec closed;
    if (name == "cubic-minus") {
      closed = EquationSpec::cubic_minus(p);
    } else if (name == "cubic-plus") {
      closed = EquationSpec::cubic_plus(p);
    } else if (name == "linear") {
      closed = EquationSpec::linear(p);
    } else if (name == "zero") {
      closed = EquationSpec::generic_v({[](double) { return 0.0; }, "zero"});
    } else {
      bad("unknown --V '" + name + "'");
    }
    v = {[closed](double phi) { return closed.potential(phi); }, name};
    IvpSpec ivp;
    ivp.phi0 = args.phi0;
    ivp.dphi0 = args.dphi0;
    ivp.x_max = std::max(std::abs(xs.front()), std::abs(xs.back())) + 0.01;
    auto sol = std::make_shared<const SampledSolution>(solve_homogeneous_ivp(v, ivp));
    const ReflectedSolution refl = reflect(sol);
    report = verify_solution(refl, EquationSpec::generic_v(v), xs, -2.0 * args.dphi0, opts);
    extra["V"] = name;
    extra["phi0"] = args.phi0;
    extra["dphi0"] = args.dphi0;
    extra["ivp_nodes"] = sol->nodes().size();
    if (name == "cubic-minus" && args.phi0 == 0.0) {
      double dev = 0.0;
      for (double x : linspace(0.0, sol->x_max(), 501)) {
        dev = std::max(dev, std::abs((*sol)(x) - eval_phi_tanh(x, p)));
      }
      extra["fixture"] = "tanh";
      extra["fixture_max_deviation"] = dev;
    }
  } else {
    bad("unknown verify target '" + target + "'");
  }

  json j = report_json(report);
  j["target"] = target;
  j["params"] = {{"mu", p.mu()}, {"lambda", p.lambda()}, {"m", p.m()}, {"k", p.k()}};
  j["grid"] = grid.to_string();
  j["printed_strength"] = printed;
  j["deviation_from_printed"] = report.source_strength - printed;
  for (auto& [key, val] : extra.items()) j[key] = val;
  emit(j.dump(2) + "\n", args.out, out);
  return report.pass() ? kOk : kToleranceFailure;
}

// ---- figure -----------------------------------------------------------------

struct FigureArgs {
  std::string id;
  std::string grid;
  std::string lambdas;
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> k;
  std::string segment;
  std::string out;
};

int cmd_figure(const FigureArgs& args, std::ostream& out) {
  FigureJob job;
  job.figure_id = args.id;
  if (!args.grid.empty()) job.grid = parse_grid(args.grid);
  if (!args.lambdas.empty()) job.lambdas = parse_list(args.lambdas);
  job.a = args.a;
  job.b = args.b;
  job.k = args.k;
  if (!args.segment.empty()) job.segment = parse_segment(args.segment);
  if (args.out.empty()) bad("figure needs --out DIR");

  const FigureOutput fig = build_figure(job);
  const std::filesystem::path dir(args.out);
  std::filesystem::create_directories(dir);
  for (const FigureCurve& c : fig.curves) {
    std::ofstream f(dir / c.file, std::ios::binary);
    if (!f) bad("cannot write " + (dir / c.file).string());
    write_csv(c.table, f);
  }
  const std::string manifest_name = args.id + "_manifest.json";
  {
    std::ofstream f(dir / manifest_name, std::ios::binary);
    if (!f) bad("cannot write " + (dir / manifest_name).string());
    f << fig.manifest.dump(2) << "\n";
  }
  out << (dir / manifest_name).string() << "\n";
  return kOk;
}

}  // namespace

std::vector<double> GridSpec::points() const { return linspace(lo, hi, static_cast<std::size_t>(n)); }

std::string GridSpec::to_string() const {
  return format_number(lo) + ":" + format_number(hi) + ":" + std::to_string(n);
}

GridSpec parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) bad("grid must be lo:hi:n, got '" + text + "'");
  GridSpec g;
  g.lo = to_double(parts[0], "grid lo");
  g.hi = to_double(parts[1], "grid hi");
  const double n = to_double(parts[2], "grid n");
  if (n != std::floor(n) || n < 2 || n > 1e7) bad("grid n must be an integer >= 2");
  g.n = static_cast<int>(n);
  if (!(g.lo < g.hi)) bad("grid needs lo < hi");
  return g;
}

Interval parse_segment(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) bad("segment must be lo:hi, got '" + text + "'");
  const Interval s{to_double(parts[0], "segment lo"), to_double(parts[1], "segment hi")};
  if (!(s.lo < s.hi)) bad("segment needs lo < hi");
  return s;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(to_double(part, "list entry"));
  if (out.empty()) bad("empty list");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Green functions and convolution potentials of the cubic and linear "
               "one-dimensional equations",
               "nlgreen"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a closed-form solution on a grid");
  eval->add_option("kind", ev.kind, "What to evaluate")->required()->check(CLI::IsMember(kEvalKinds));
  add_model_flags(eval, ev.params);
  eval->add_option("--x1", ev.x1, "Source point of green-* kinds");
  eval->add_option("--a", ev.a, "Step start (step-tanh, tan-step)");
  eval->add_option("--b", ev.b, "Step end (step-tanh, tan-step)");
  eval->add_flag("--printed-form", ev.printed_form, "vlin-gaussian: bracket as originally printed");
  eval->add_option("--grid", ev.grid, "lo:hi:n");
  eval->add_option("--out", ev.out, "Output file (default stdout)");
  eval->add_option("--format", ev.format)->check(CLI::IsMember({"csv", "json"}));

  PotentialArgs pa;
  auto* pot = app.add_subcommand("potential", "Convolution potential by adaptive quadrature");
  pot->add_option("--dist", pa.dist)->check(CLI::IsMember({"step", "expabs", "gaussian", "bell", "unitstep01"}));
  pot->add_option("--a", pa.a, "step start / gaussian width / bell shift");
  pot->add_option("--b", pa.b, "step end / bell width");
  pot->add_option("--kernel", pa.kernel)->check(CLI::IsMember({"linear", "tanh", "tan"}));
  add_model_flags(pot, pa.params);
  pot->add_option("--grid", pa.grid, "lo:hi:n");
  pot->add_option("--rel-tol", pa.rel_tol);
  pot->add_option("--abs-tol", pa.abs_tol);
  pot->add_option("--segment", pa.segment, "lo:hi source window between tan poles");
  pot->add_option("--out", pa.out, "Output file (default stdout)");
  pot->add_option("--format", pa.format)->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Residual and source-strength check, JSON report");
  ver->add_option("target", va.target)
      ->required()
      ->check(CLI::IsMember({"linear-point", "tanh-point", "tan-point", "green-linear",
                             "green-tanh", "green-tan", "generic"}));
  add_model_flags(ver, va.params);
  ver->add_option("--x1", va.x1, "Source point of green-* targets");
  ver->add_option("--V", va.v, "generic: cubic-minus|cubic-plus|linear|zero");
  ver->add_option("--phi0", va.phi0);
  ver->add_option("--dphi0", va.dphi0);
  ver->add_option("--grid", va.grid, "lo:hi:n, relative to the source point");
  ver->add_option("--out", va.out);

  FigureArgs fa;
  auto* figc = app.add_subcommand("figure", "Write plot data (CSV per curve + manifest)");
  figc->add_option("id", fa.id)->required()->check(CLI::IsMember(figure_ids()));
  figc->add_option("--grid", fa.grid, "lo:hi:n");
  figc->add_option("--lambdas", fa.lambdas, "comma-separated lambda values (fig1, fig2)");
  figc->add_option("--a", fa.a);
  figc->add_option("--b", fa.b);
  figc->add_option("--k", fa.k);
  figc->add_option("--segment", fa.segment, "lo:hi (fig7a, fig7b)");
  figc->add_option("--out", fa.out, "Output directory")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kBadArguments;
  }

  try {
    if (*eval) return cmd_eval(ev, out);
    if (*pot) return cmd_potential(pa, out, err);
    if (*ver) return cmd_verify(va, out);
    if (*figc) return cmd_figure(fa, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (!e.poles().empty()) err << "poles: " << format_poles(e.poles()) << "\n";
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kBadArguments;
  }
  return kBadArguments;
}

}  // namespace nlgreen::cli
