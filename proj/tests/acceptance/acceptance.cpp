// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mgslab/config.hpp"
#include "mgslab/error.hpp"
#include "mgslab/evolution.hpp"
#include "mgslab/experiments.hpp"
#include "mgslab/fitting.hpp"
#include "mgslab/instability.hpp"
#include "mgslab/spectral_ops.hpp"
#include "mgslab/symbols.hpp"

using namespace mgslab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome(const fs::path&, int)> run;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

Params acceptance_params(double kappa = 0.1, double gamma = 0.25) {
  Params p;
  p.kappa = kappa;
  p.gamma = gamma;
  return p;
}

SolveOptions leading_root() {
  SolveOptions o;
  o.sign = RootSign::Any;
  return o;
}

// Runs an experiment and summarizes its verdict: the failing metrics, or
// the metric count when everything passed.
Outcome from_verdict(const std::string& json, const fs::path& dir, int workers) {
  ExperimentConfig cfg = parse_config(json);
  cfg.output_dir = dir.string();
  cfg.workers = workers;
  const Verdict v = run_experiment(cfg);
  Outcome out{v.passed, {}};
  std::ostringstream os;
  int failing = 0;
  for (const Metric& m : v.metrics) {
    if (m.passed) continue;
    if (failing < 4) os << (failing ? "; " : "") << m.name << " = " << fmt(m.value);
    ++failing;
  }
  if (failing > 4) os << "; ... (" << failing << " failing)";
  if (failing == 0) os << v.metrics.size() << " metrics ok";
  os << " [" << dir.string() << "]";
  out.detail = os.str();
  return out;
}

Outcome divergence_identity(const fs::path&, int) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  double worst = 0.0;
  for (int set = 0; set < 3; ++set) {
    const double omega = u(rng), beta = u(rng), eta = u(rng);
    const Params p = Params::from_field(omega, beta, eta, 0.1, 0.25);
    worst = std::max(worst, max_divergence_residual(32, p));
  }
  return {worst <= 1e-12, "max |k.M(k)| over 3 parameter sets, K = 32: " + fmt(worst)};
}

Outcome anisotropy(const fs::path&, int) {
  const std::vector<int> k1{16, 32, 64, 128, 256, 512};
  const Params p = acceptance_params();
  double worst = 0.0;
  std::ostringstream os;
  for (double r : {0.25, 0.5}) {
    const GrowthExponents e = anisotropy_probe(r, k1, p, CurveRounding::Floor);
    worst = std::max({worst, std::abs(e.e1 - r), std::abs(e.e2 - 1.0), std::abs(e.e3 - 2.0 * r)});
    os << "r = " << r << ": (" << fmt(e.e1) << ", " << fmt(e.e2) << ", " << fmt(e.e3) << "); ";
  }
  os << "max slope error " << fmt(worst);
  return {worst <= 0.1, os.str()};
}

Outcome bracketing(const fs::path& dir, int workers) {
  Params anchor = acceptance_params(0.0);
  const EigenBounds b = eigenvalue_bounds(EigenProblem{1, anchor});
  const bool anchor_ok =
      std::abs(b.lower - 0.04) < 1e-12 && std::abs(b.upper - 4.0 / 26.0) < 1e-12;
  Outcome out = from_verdict(R"({
    "experiment": "eigen-table",
    "params": {"omega": 1, "mu": 1, "kappa": 0.1, "gamma": 0.25, "a": 1, "m": 1},
    "sweep": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
    "options": {"root": "positive", "depth": 40}
  })", dir, workers);
  out.passed = out.passed && anchor_ok;
  out.detail = "anchor (" + fmt(b.lower) + ", " + fmt(b.upper) + ")" +
               (anchor_ok ? " ok; " : " WRONG; ") + out.detail;
  return out;
}

Outcome coefficient_contracts(const fs::path&, int) {
  const Params p = acceptance_params();
  double worst_res = 0.0, worst_eta = INFINITY, worst_growth = -INFINITY;
  int sign_breaks = 0;
  bool finite_fit = true;
  for (int j = 1; j <= 10; ++j) {
    const EigenProblem prob{j, p};
    const EigenResult r = solve_eigenvalue(prob, leading_root());
    for (std::size_t i = 0; i < r.eta.size(); ++i) {
      const int q = static_cast<int>(i) + 2;
      const double x = sigma_shift(r.sigma, q, prob) * alpha_coeff(q, prob);
      // margin > 0 iff -2/x < eta < -1/x
      const double margin = std::min(-1.0 / x - r.eta[i], r.eta[i] + 2.0 / x) * x;
      worst_eta = std::min(worst_eta, margin);
    }
    CoefficientSequence seq{r.eta, r.c, r.log_abs_c, r.sign_c};
    for (double v : recursion_residuals(r.sigma, seq, prob)) worst_res = std::max(worst_res, v);
    for (std::size_t i = 0; i + 1 < r.sign_c.size(); ++i) {
      if (r.sign_c[i] * r.sign_c[i + 1] >= 0) ++sign_breaks;
    }
    // log(|c_p| ((p-1)!)^4) against p: a finite slope is a finite geometric rate.
    std::vector<double> ps, ys;
    for (std::size_t i = 0; i < r.log_abs_c.size(); ++i) {
      const double q = static_cast<double>(i + 1);
      ps.push_back(q);
      ys.push_back(r.log_abs_c[i] + 4.0 * std::lgamma(q));
    }
    const LinearFit fit = linear_fit(ps, ys);
    finite_fit = finite_fit && std::isfinite(fit.slope) && std::isfinite(fit.intercept);
    worst_growth = std::max(worst_growth, fit.slope);
  }
  const bool ok = worst_eta > 0.0 && worst_res <= 1e-10 && sign_breaks == 0 && finite_fit;
  return {ok, "j = 1..10 leading roots: min eta margin " + fmt(worst_eta) +
                  ", max recursion residual " + fmt(worst_res) + ", sign breaks " +
                  std::to_string(sign_breaks) + ", max fitted log C " + fmt(worst_growth)};
}

Outcome eigen_residual(const fs::path&, int) {
  const Params p = acceptance_params();
  const EigenProblem prob{2, p};
  const EigenResult r = solve_eigenvalue(prob, leading_root());
  const SpectralField mode = synthesize_eigenmode(r, prob, Grid(64));
  const double rel = l2_norm(linearized_rhs(mode, p) - r.sigma * mode) / l2_norm(mode);
  return {rel <= 1e-8, "j = 2, sigma = " + fmt(r.sigma) + ", 64^3: ||L theta - sigma theta|| / "
                       "||theta|| = " + fmt(rel)};
}

Outcome growth(const fs::path& dir, int workers) {
  return from_verdict(R"({
    "experiment": "growth-verify",
    "params": {"omega": 1, "mu": 1, "kappa": 0.1, "gamma": 0.25, "a": 1, "m": 1},
    "grid": {"n1": 48, "n2": 16, "n3": 48},
    "evolution": {"dt": 0.1, "t_end": 1, "s": 3, "record_every": 10},
    "sweep": [2, 3],
    "options": {"root": "any", "efolds": 2, "j0": 2}
  })", dir, workers);
}

Outcome dichotomy(const fs::path&, int) {
  std::ostringstream os;
  int mismatches = 0;
  const double threshold = critical_kappa_half(acceptance_params(0.0, 0.5));
  os << "threshold " << fmt(threshold);
  for (double kappa : {0.02, 0.05}) {
    const bool expect_unstable = kappa < threshold;
    std::vector<int> wrong;
    for (int j = 1; j <= 64; ++j) {
      bool unstable = true;
      try {
        solve_eigenvalue(EigenProblem{j, acceptance_params(kappa, 0.5)});
      } catch (const NoUnstableEigenvalue&) {
        unstable = false;
      }
      if (unstable != expect_unstable) wrong.push_back(j);
    }
    mismatches += static_cast<int>(wrong.size());
    os << "; kappa = " << kappa << ": " << wrong.size() << " mismatches";
    if (!wrong.empty()) {
      os << " (j =";
      for (std::size_t i = 0; i < std::min<std::size_t>(wrong.size(), 6); ++i) os << " " << wrong[i];
      if (wrong.size() > 6) os << " ...";
      os << ")";
    }
  }
  return {mismatches == 0, os.str()};
}

Outcome fixed_point(const fs::path&, int) {
  const Grid g(32);
  double worst = 0.0;
  for (double gamma : {0.25, 0.5, 0.75}) {
    const Params p = acceptance_params(0.1, gamma);
    const SteadyStatePair pair = steady_state_pair(p, g);
    worst = std::max(worst, max_abs_coeff(step(pair.theta0, pair.source, p, 0.01) - pair.theta0));
  }
  return {worst <= 1e-12, "max per-mode change after one step: " + fmt(worst)};
}

Outcome plane_support(const fs::path& dir, int workers) {
  return from_verdict(R"({
    "experiment": "plane-support",
    "params": {"omega": 1, "mu": 1, "kappa": 0.1, "gamma": 0.25},
    "grid": {"n": 64},
    "evolution": {"dt": 0.005, "t_end": 1, "s": 3},
    "plane": {"j1": 1, "j2": 1},
    "seed": 5,
    "options": {"steps": 200, "data_l2": 0.1, "source_l2": 0.01, "data_box": 6}
  })", dir, workers);
}

Outcome local_wellposed(const fs::path& dir, int workers) {
  return from_verdict(R"({
    "experiment": "local-wellposed",
    "params": {"omega": 1, "mu": 1, "kappa": 0.1, "gamma": 0.75},
    "evolution": {"dt": 0.01, "t_end": 1, "s": 3, "record_every": 10},
    "sweep": [48, 64],
    "seed": 11,
    "options": {"data_l2": 1.0, "data_box": 4, "hs_tol": 1e-6}
  })", dir, workers);
}

Outcome small_data(const fs::path& dir, int workers) {
  return from_verdict(R"({
    "experiment": "smalldata-global",
    "params": {"omega": 1, "mu": 1, "kappa": 0.1, "gamma": 0.5},
    "grid": {"n": 32},
    "evolution": {"dt": 0.05, "t_end": 10, "s": 3, "record_every": 10},
    "seed": 3,
    "options": {"data_l2": 1e-5, "source_l2": 1e-6, "data_box": 3}
  })", dir, workers);
}

Outcome illposed(const fs::path& dir, int workers) {
  const std::string base = R"(
    "experiment": "illposed-demo",
    "grid": {"n1": 120, "n2": 24, "n3": 48},
    "evolution": {"dt": 0.01, "t_end": 1, "s": 3, "record_every": 10},
    "sweep": [2, 3, 4, 5],
    "options": {"amplitude": 1e-4, "shape_gamma": 0.25, "bound": 10})";
  const Outcome demo = from_verdict(
      "{" + base + R"(, "params": {"omega": 1, "mu": 1, "kappa": 0.1, "gamma": 0.25}})",
      dir / "gamma_0.25", workers);
  const Outcome control = from_verdict(
      "{" + base + R"(, "params": {"omega": 1, "mu": 1, "kappa": 0.1, "gamma": 0.75}})",
      dir / "gamma_0.75", workers);
  return {demo.passed && control.passed,
          "gamma = 0.25: " + demo.detail + "; control gamma = 0.75: " + control.detail};
}

std::vector<Criterion> criteria() {
  return {
      {1, "divergence-free symbol identity", 1.0, divergence_identity},
      {2, "anisotropic symbol asymptotics", 1.0, anisotropy},
      {3, "eigenvalue bracketing", 1.0, bracketing},
      {4, "coefficient-sequence contracts", 1.0, coefficient_contracts},
      {5, "eigen-residual cross-check", 10.0, eigen_residual},
      {6, "linear growth verification", 120.0, growth},
      {7, "gamma = 1/2 dichotomy switch", 5.0, dichotomy},
      {8, "steady-state fixed point", 1.0, fixed_point},
      {9, "plane-support invariance", 300.0, plane_support},
      {10, "well-posed regime convergence", 600.0, local_wellposed},
      {11, "small-data boundedness", 600.0, small_data},
      {12, "ill-posedness shadow", 1200.0, illposed},
  };
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"mgslab acceptance suite"};
  std::vector<int> only;
  std::string out = (fs::temp_directory_path() / "mgslab_acceptance").string();
  int workers = 1;
  app.add_option("--only", only, "criterion numbers to run (default: all)")->check(CLI::Range(1, 12));
  app.add_option("--out", out, "directory for experiment outputs");
  app.add_option("--workers", workers, "worker threads for experiment sweeps")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  int failed = 0, ran = 0;
  for (const Criterion& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    char tag[8];
    std::snprintf(tag, sizeof tag, "C%02d", c.id);
    const fs::path dir = fs::path(out) / tag;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run(dir, workers);
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool passed = o.passed && in_time;
    std::printf("%s %s %s: %s; %.2f s (limit %g s%s)\n", tag, passed ? "PASS" : "FAIL",
                c.name.c_str(), o.detail.c_str(), secs, c.limit_s,
                in_time ? "" : ", EXCEEDED");
    std::fflush(stdout);
    ++ran;
    if (!passed) ++failed;
  }
  std::printf("%d/%d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
