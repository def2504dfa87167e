#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mgslab/config.hpp"
#include "mgslab/error.hpp"
#include "mgslab/experiments.hpp"
#include "mgslab/instability.hpp"
#include "mgslab/symbols.hpp"

namespace py = pybind11;
using namespace mgslab;

namespace {

py::dict verdict_dict(const Verdict& v) {
  py::list metrics;
  for (const Metric& m : v.metrics) {
    py::dict d;
    d["name"] = m.name;
    d["value"] = m.value;
    d["threshold"] = m.threshold;
    d["passed"] = m.passed;
    metrics.append(d);
  }
  py::dict out;
  out["experiment"] = v.experiment;
  out["passed"] = v.passed;
  out["metrics"] = metrics;
  out["notes"] = v.notes;
  return out;
}

ExperimentConfig with_output(ExperimentConfig cfg, const std::optional<std::string>& out,
                             std::optional<int> workers) {
  if (out) cfg.output_dir = *out;
  if (workers) cfg.workers = *workers;
  cfg.validate();
  return cfg;
}

} // namespace

PYBIND11_MODULE(_mgslab, m) {
  m.doc() = "Fractionally diffusive MG active scalar: symbols, eigenvalues and experiments.";

  py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<NoUnstableEigenvalue>(m, "NoUnstableEigenvalue");
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<Params>(m, "Params")
      .def(py::init<>())
      .def(py::init([](double omega, double beta, double eta, double kappa, double gamma,
                       double a, int mm) {
             Params p = Params::from_field(omega, beta, eta, kappa, gamma, a, mm);
             p.validate();
             return p;
           }),
           py::arg("omega") = 1.0, py::arg("beta") = 1.0, py::arg("eta") = 1.0,
           py::arg("kappa") = 0.1, py::arg("gamma") = 0.25, py::arg("a") = 1.0,
           py::arg("m") = 1)
      .def_readwrite("omega", &Params::omega)
      .def_readwrite("beta", &Params::beta)
      .def_readwrite("eta", &Params::eta)
      .def_readwrite("mu", &Params::mu)
      .def_readwrite("kappa", &Params::kappa)
      .def_readwrite("gamma", &Params::gamma)
      .def_readwrite("a", &Params::a)
      .def_readwrite("m", &Params::m)
      .def("validate", &Params::validate);

  m.def("mg_symbol", [](std::int64_t k1, std::int64_t k2, std::int64_t k3, const Params& p) {
    const SymbolValue s = mg_symbol({k1, k2, k3}, p);
    return py::make_tuple(s.m1, s.m2, s.m3);
  }, py::arg("k1"), py::arg("k2"), py::arg("k3"), py::arg("params"));
  m.def("max_divergence_residual", &max_divergence_residual, py::arg("cutoff"), py::arg("params"));
  m.def("symbol_sup", &symbol_sup, py::arg("cutoff"), py::arg("params"));

  py::enum_<RootSign>(m, "RootSign")
      .value("Positive", RootSign::Positive)
      .value("Any", RootSign::Any);

  py::class_<EigenResult>(m, "EigenResult")
      .def_readonly("sigma", &EigenResult::sigma)
      .def_readonly("lower", &EigenResult::lower)
      .def_readonly("upper", &EigenResult::upper)
      .def_readonly("c", &EigenResult::c)
      .def_readonly("eta", &EigenResult::eta)
      .def_readonly("truncation_p", &EigenResult::truncation_p)
      .def_readonly("residual", &EigenResult::residual)
      .def_readonly("depth_shift", &EigenResult::depth_shift)
      .def_readonly("analyzed_regime", &EigenResult::analyzed_regime);

  m.def("solve_eigenvalue",
        [](int j, const Params& p, RootSign sign, int depth) {
          SolveOptions o;
          o.sign = sign;
          o.depth = depth;
          return solve_eigenvalue(EigenProblem{j, p}, o);
        },
        py::arg("j"), py::arg("params"), py::arg("sign") = RootSign::Positive,
        py::arg("depth") = 40);
  m.def("eigenvalue_bounds", [](int j, const Params& p) {
    const EigenBounds b = eigenvalue_bounds(EigenProblem{j, p});
    return py::make_tuple(b.lower, b.upper);
  }, py::arg("j"), py::arg("params"));
  m.def("growth_constant", &growth_constant, py::arg("j0"), py::arg("params"));
  m.def("critical_kappa_half", &critical_kappa_half, py::arg("params"));

  m.def("experiment_names", &experiment_names);
  m.def("run_config",
        [](const std::string& path, std::optional<std::string> output_dir,
           std::optional<int> workers) {
          const ExperimentConfig cfg = with_output(load_config(path), output_dir, workers);
          Verdict v;
          {
            py::gil_scoped_release release;
            v = run_experiment(cfg);
          }
          return verdict_dict(v);
        },
        py::arg("path"), py::arg("output_dir") = py::none(), py::arg("workers") = py::none());
  m.def("run_json",
        [](const std::string& text, std::optional<std::string> output_dir,
           std::optional<int> workers) {
          const ExperimentConfig cfg = with_output(parse_config(text), output_dir, workers);
          Verdict v;
          {
            py::gil_scoped_release release;
            v = run_experiment(cfg);
          }
          return verdict_dict(v);
        },
        py::arg("text"), py::arg("output_dir") = py::none(), py::arg("workers") = py::none());
}
