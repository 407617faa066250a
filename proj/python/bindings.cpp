#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "nlgreen/errors.hpp"
#include "nlgreen/ode.hpp"
#include "nlgreen/potentials.hpp"
#include "nlgreen/solutions.hpp"
#include "nlgreen/special_functions.hpp"
#include "nlgreen/verifier.hpp"

namespace py = pybind11;
using namespace nlgreen;

namespace {

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["residual_samples"] = r.residual_samples;
  d["skipped"] = r.skipped;
  d["max_abs_residual"] = r.max_abs_residual;
  d["jump_estimate"] = r.jump_estimate;
  d["source_strength"] = r.source_strength;
  d["expected_strength"] = r.expected_strength;
  d["residual_pass"] = r.residual_pass;
  d["strength_pass"] = r.strength_pass;
  d["pass"] = r.pass();
  return d;
}

KernelKind kernel_kind(const std::string& name) {
  if (name == "linear") return KernelKind::LinearExp;
  if (name == "tanh") return KernelKind::TanhCubic;
  if (name == "tan") return KernelKind::TanCubic;
  throw Error(ErrorCode::InvalidArgument, "kernel must be linear, tanh or tan");
}

}  // namespace

PYBIND11_MODULE(_nlgreen, m) {
  m.doc() = "Green functions and convolution potentials of -phi'' + V(phi) = source";

  static PyObject* exc_type =
      PyErr_NewException("nlgreen._nlgreen.NlgreenError", PyExc_RuntimeError, nullptr);
  m.attr("NlgreenError") = py::handle(exc_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::handle(exc_type)(e.what());
      err.attr("code") = std::string(to_string(e.code()));
      err.attr("poles") = e.poles();
      PyErr_SetObject(exc_type, err.ptr());
    }
  });

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init<double, double, double, double>(), py::arg("mu") = 1.0, py::arg("lam") = 1.0,
           py::arg("m") = 1.0, py::arg("k") = 1.0)
      .def_property_readonly("mu", &ModelParams::mu)
      .def_property_readonly("lam", &ModelParams::lambda)
      .def_property_readonly("m", &ModelParams::m)
      .def_property_readonly("k", &ModelParams::k)
      .def("__repr__", [](const ModelParams& p) {
        return py::str("ModelParams(mu={}, lam={}, m={}, k={})").format(p.mu(), p.lambda(), p.m(), p.k());
      });

  py::class_<SourceDistribution>(m, "SourceDistribution")
      .def_static("step", &SourceDistribution::step, py::arg("a"), py::arg("b"))
      .def_static("exp_abs", &SourceDistribution::exp_abs)
      .def_static("gaussian", &SourceDistribution::gaussian, py::arg("width"))
      .def_static("bell", &SourceDistribution::bell, py::arg("a"), py::arg("b"))
      .def_static("unit_step01", &SourceDistribution::unit_step01)
      .def("__call__", &SourceDistribution::operator())
      .def_property_readonly("name", &SourceDistribution::name);

  const ModelParams unit;
  m.def("phi_tanh", &eval_phi_tanh, py::arg("x"), py::arg("params") = unit);
  m.def("psi_tan", [](double x, const ModelParams& p) { return eval_psi_tan(x, p); }, py::arg("x"),
        py::arg("params") = unit);
  m.def("point_tanh", &eval_point_tanh, py::arg("x"), py::arg("params") = unit);
  m.def("point_tan", [](double x, const ModelParams& p) { return eval_point_tan(x, p); }, py::arg("x"),
        py::arg("params") = unit);
  m.def("point_linear", &eval_point_linear, py::arg("x"), py::arg("params") = unit);
  m.def("green_linear", &green_linear, py::arg("x"), py::arg("x1"), py::arg("params") = unit);
  m.def("green_tanh", &green_tanh, py::arg("x"), py::arg("x1"), py::arg("params") = unit);
  m.def("green_tan", [](double x, double x1, const ModelParams& p) { return green_tan(x, x1, p); },
        py::arg("x"), py::arg("x1"), py::arg("params") = unit);
  m.def("pole_locations", &pole_locations, py::arg("x"), py::arg("params"), py::arg("lo"), py::arg("hi"));

  m.def("erf", &special::erf);
  m.def("erfc", &special::erfc);
  m.def("digamma", &special::digamma);
  m.def("hyp2f1", [](double a, double b, double c, double z) { return special::hyp2f1({a, b, c, z}); },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));

  m.def(
      "potential",
      [](const SourceDistribution& src, double x, const std::string& kernel, const ModelParams& p,
         double rel_tol, double abs_tol, std::optional<std::pair<double, double>> segment) {
        QuadratureOptions o;
        o.rel_tol = rel_tol;
        o.abs_tol = abs_tol;
        if (segment) {
          o.pole_policy = PolePolicy::Segment;
          o.segment = Interval{segment->first, segment->second};
        }
        const PotentialResult r = potential_quadrature(src, KernelSpec{kernel_kind(kernel), p}, x, o);
        return py::make_tuple(r.value, r.error_estimate);
      },
      py::arg("source"), py::arg("x"), py::arg("kernel") = "tanh", py::arg("params") = unit,
      py::arg("rel_tol") = 1e-12, py::arg("abs_tol") = 1e-14, py::arg("segment") = py::none(),
      "(value, error_estimate) of the convolution potential at x");
  m.def("step_tanh", &potential_step_tanh, py::arg("x"), py::arg("a"), py::arg("b"),
        py::arg("params") = unit);
  m.def("tan_step", &potential_tan_step, py::arg("x"), py::arg("a"), py::arg("b"),
        py::arg("params") = unit);
  m.def("v1_step", &analytic_v1_step, py::arg("x"));
  m.def("ve_exponential", &analytic_ve_exponential, py::arg("x"));
  m.def("vlin_gaussian", &analytic_vlin_gaussian, py::arg("x"), py::arg("k"));

  m.def(
      "solve_ivp",
      [](std::function<double(double)> v, double phi0, double dphi0, double x_max, double rel_tol) {
        IvpSpec spec;
        spec.phi0 = phi0;
        spec.dphi0 = dphi0;
        spec.x_max = x_max;
        spec.rel_tol = rel_tol;
        // A Python callable needs the GIL; the solver is single-threaded.
        const SampledSolution s = solve_homogeneous_ivp({std::move(v), "python"}, spec);
        return py::make_tuple(s.nodes(), s.values(), s.derivs());
      },
      py::arg("V"), py::arg("phi0"), py::arg("dphi0"), py::arg("x_max"), py::arg("rel_tol") = 1e-10,
      "Integrate phi'' = V(phi) from 0; returns (nodes, phi, dphi)");

  m.def(
      "verify_point",
      [](const std::string& target, const ModelParams& p, std::vector<double> grid) {
        if (grid.empty()) grid = linspace(-5.0, 5.0, 200);
        VerifyOptions o;
        if (target == "linear") {
          return report_dict(verify_solution([p](double x) { return eval_point_linear(x, p); },
                                             EquationSpec::linear(p), grid, 1.0, o));
        }
        if (target == "tanh") {
          return report_dict(verify_solution([p](double x) { return eval_point_tanh(x, p); },
                                             EquationSpec::cubic_minus(p), grid,
                                             -std::sqrt(2.0) * p.mu() * p.mu() / std::sqrt(p.lambda()), o));
        }
        if (target == "tan") {
          o.poles = pole_locations(0.0, p, grid.front() - 1.0, grid.back() + 1.0);
          return report_dict(verify_solution([p](double x) { return eval_point_tan(x, p); },
                                             EquationSpec::cubic_plus(p), grid,
                                             -std::sqrt(2.0) * p.m() * p.m() / std::sqrt(p.lambda()), o));
        }
        throw Error(ErrorCode::InvalidArgument, "target must be linear, tanh or tan");
      },
      py::arg("target"), py::arg("params") = unit, py::arg("grid") = std::vector<double>{},
      "Residual and source-strength check of a point solution");
}
