#include "mgslab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "mgslab/error.hpp"
#include "mgslab/fitting.hpp"
#include "mgslab/random_field.hpp"
#include "mgslab/spectral_ops.hpp"
#include "mgslab/symbols.hpp"
#include "mgslab/transforms.hpp"

namespace mgslab {

namespace fs = std::filesystem;

const Metric& Verdict::add(std::string name, double value, double threshold, Comparison cmp) {
  Metric m{std::move(name), value, threshold, cmp, false};
  if (std::isfinite(value)) {
    switch (cmp) {
    case Comparison::AtMost: m.passed = value <= threshold; break;
    case Comparison::Below: m.passed = value < threshold; break;
    case Comparison::AtLeast: m.passed = value >= threshold; break;
    case Comparison::Above: m.passed = value > threshold; break;
    }
  }
  passed = passed && m.passed;
  metrics.push_back(std::move(m));
  return metrics.back();
}

const Metric* Verdict::find(std::string_view name) const {
  for (const auto& m : metrics) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

namespace {

constexpr ExperimentInfo kCatalog[] = {
    {"symbol-audit", "divergence, evenness and anisotropic growth of the MG symbols"},
    {"eigen-table", "continued-fraction eigenvalues over a j sweep with their brackets"},
    {"growth-verify", "linearized runs from eigenmodes against the solved growth rate"},
    {"illposed-demo", "amplification of eigenmode perturbations of the steady state"},
    {"local-wellposed", "self-convergence of the nonlinear solver across resolutions"},
    {"smalldata-global", "boundedness of small data at gamma = 1/2"},
    {"plane-support", "off-plane leakage for data supported on a frequency plane"},
    {"dichotomy-sweep", "sign of the growth constant against solved eigenvalues"},
};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

/// CSV file with full-precision decimal numbers.
class Csv {
public:
  Csv(const fs::path& path, const std::string& header) : out_(path) {
    if (!out_) throw Error("cannot open " + path.string() + " for writing");
    out_ << std::setprecision(17) << header << '\n';
  }

  template <class... T>
  void row(const T&... v) {
    bool first = true;
    ((out_ << (first ? "" : ",") << cell(v), first = false), ...);
    out_ << '\n';
  }

private:
  template <class T>
  static const T& cell(const T& v) {
    return v;
  }
  static int cell(bool v) { return v ? 1 : 0; }

  std::ofstream out_;
};

template <class R, class F>
std::vector<R> parallel_map(std::size_t n, int workers, F fn) {
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<int> sweep_or(const ExperimentConfig& cfg, std::vector<int> fallback) {
  return cfg.sweep.empty() ? fallback : cfg.sweep;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

double phys_sup(const SpectralField& f) {
  const PhysicalField p = to_physical(f);
  double v = 0.0;
  for (double x : p.values) v = std::max(v, std::abs(x));
  return v;
}

void add_run_metrics(Verdict& v, const std::string& tag, const RunResult& r) {
  v.add("completed_" + tag, r.completed() ? 1.0 : 0.0, 1.0, Comparison::AtLeast);
  v.add("resolved_" + tag, r.under_resolved ? 0.0 : 1.0, 1.0, Comparison::AtLeast);
  if (!r.completed()) v.note(tag + ": " + r.message);
  if (r.under_resolved) v.note(tag + ": outer-band energy exceeded 1% (under-resolved)");
}

struct EigenRow {
  int j = 0;
  bool ok = false;
  EigenResult res;
  std::string error;
};

EigenRow solve_row(int j, const Params& p, const ExperimentOptions& o, RootSign sign) {
  EigenRow row;
  row.j = j;
  SolveOptions so;
  so.sign = sign;
  so.depth = o.depth;
  try {
    row.res = solve_eigenvalue(EigenProblem{j, p}, so);
    row.ok = true;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

void write_eigen_csv(const fs::path& path, const std::vector<EigenRow>& rows, const Params& p,
                     int j0) {
  Csv csv(path, "j,sigma,lower,upper,residual,P,cstar_floor");
  const double cstar = growth_constant(j0, p);
  for (const auto& r : rows) {
    const EigenBounds b = eigenvalue_bounds(EigenProblem{r.j, p});
    const double floor = static_cast<double>(r.j) * r.j * cstar;
    if (r.ok) {
      csv.row(r.j, r.res.sigma, r.res.lower, r.res.upper, r.res.residual, r.res.truncation_p,
              floor);
    } else {
      csv.row(r.j, kNaN, b.lower, b.upper, kNaN, 0, floor);
    }
  }
}

std::string jtag(int j) { return "j" + std::to_string(j); }

// ---------------------------------------------------------------------------

Verdict symbol_audit(const ExperimentConfig& cfg, const fs::path& dir) {
  Verdict v;
  const ExperimentOptions& o = cfg.options;
  std::mt19937_64 rng(cfg.seed);
  auto draw = [&] { return 0.5 + 1.5 * static_cast<double>(rng() >> 11) * 0x1p-53; };
  std::vector<Params> sets;
  for (int i = 0; i < o.param_sets; ++i) {
    Params p = cfg.params;
    p.omega = draw();
    p.beta = draw();
    p.eta = draw();
    p.mu = p.beta * p.beta / p.eta;
    sets.push_back(p);
  }
  struct Row {
    double div = 0.0, even = 0.0, linear = 0.0;
  };
  const auto rows = parallel_map<Row>(sets.size(), cfg.workers, [&](std::size_t i) {
    return Row{max_divergence_residual(o.symbol_k, sets[i]), max_evenness_defect(o.symbol_k, sets[i]),
               symbol_linear_bound_constant(o.symbol_k, sets[i])};
  });
  Csv audit(dir / "symbol_audit.csv", "set,omega,beta,eta,mu,max_divergence,evenness_defect,linear_bound");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Params& p = sets[i];
    audit.row(i, p.omega, p.beta, p.eta, p.mu, rows[i].div, rows[i].even, rows[i].linear);
    const std::string tag = "set" + std::to_string(i);
    v.add("max_divergence_" + tag, rows[i].div, 1e-12, Comparison::AtMost);
    v.add("evenness_defect_" + tag, rows[i].even, 0.0, Comparison::AtMost);
  }

  Csv aniso(dir / "anisotropy.csv", "r,slope1,slope2,slope3,expected1,expected2,expected3");
  for (double r : o.probe_r) {
    const GrowthExponents e = anisotropy_probe(r, o.probe_k1, cfg.params, CurveRounding::Floor);
    const double want[3] = {r, 1.0, 2.0 * r};
    const double got[3] = {e.e1, e.e2, e.e3};
    aniso.row(r, e.e1, e.e2, e.e3, want[0], want[1], want[2]);
    for (int j = 0; j < 3; ++j) {
      v.add("slope_error_r" + num(r) + "_M" + std::to_string(j + 1), std::abs(got[j] - want[j]),
            0.1, Comparison::AtMost);
    }
  }
  return v;
}

Verdict eigen_table(const ExperimentConfig& cfg, const fs::path& dir) {
  Verdict v;
  const ExperimentOptions& o = cfg.options;
  const std::vector<int> js = sweep_or(cfg, range(1, 10));
  const RootSign sign = o.root.value_or(RootSign::Positive);
  const auto rows = parallel_map<EigenRow>(js.size(), cfg.workers, [&](std::size_t i) {
    return solve_row(js[i], cfg.params, o, sign);
  });
  write_eigen_csv(dir / "eigen_sweep.csv", rows, cfg.params, o.j0);
  for (const auto& r : rows) {
    const std::string tag = jtag(r.j);
    v.add("solved_" + tag, r.ok ? 1.0 : 0.0, 1.0, Comparison::AtLeast);
    if (!r.ok) {
      v.note(tag + ": " + r.error);
      continue;
    }
    const EigenProblem prob{r.j, cfg.params};
    const double s = r.res.sigma;
    v.add("bracket_margin_" + tag, std::min(s - r.res.lower, r.res.upper - s), 0.0,
          Comparison::Above);
    const double prod = sigma_shift(s, 1, prob) * sigma_shift(s, 2, prob);
    const double base = 1.0 / (alpha_coeff(1, prob) * alpha_coeff(2, prob));
    v.add("product_bound_margin_" + tag, std::min(prod - base, 2.0 * base - prod) / base, 0.0,
          Comparison::Above);
    v.add("residual_" + tag, r.res.residual / (sigma_shift(s, 1, prob) * alpha_coeff(1, prob)),
          1e-10, Comparison::AtMost);
    v.add("depth_shift_" + tag, r.res.depth_shift, 1e-10, Comparison::AtMost);
    if (!r.res.analyzed_regime) {
      v.note(tag + ": sigma_2 alpha_2 <= 2 at the root (outside the analyzed regime)");
    }
  }
  return v;
}

Verdict growth_verify(const ExperimentConfig& cfg, const fs::path& dir) {
  Verdict v;
  const ExperimentOptions& o = cfg.options;
  const std::vector<int> js = sweep_or(cfg, {2, 3});
  const RootSign sign = o.root.value_or(RootSign::Any);
  const double cstar = growth_constant(o.j0, cfg.params);

  struct Row {
    EigenRow eig;
    std::optional<RunResult> run;
    double rate = kNaN;
    double t_end = 0.0;
  };
  auto rows = parallel_map<Row>(js.size(), cfg.workers, [&](std::size_t i) {
    Row row;
    row.eig = solve_row(js[i], cfg.params, o, sign);
    if (!row.eig.ok) return row;
    const EigenProblem prob{js[i], cfg.params};
    const SpectralField mode = synthesize_eigenmode(row.eig.res, prob, cfg.grid);
    EvolutionConfig ev = cfg.evolution;
    ev.plane.reset();
    ev.enforce_plane = false;
    row.t_end = o.efolds / std::abs(row.eig.res.sigma);
    ev.t_end = row.t_end;
    ev.dt = std::min(ev.dt, ev.t_end);
    row.run = run_linearized(mode, cfg.params, ev);
    std::vector<double> logs;
    for (double x : row.run->series.l2()) logs.push_back(std::log(x));
    row.rate = linear_fit(row.run->series.times(), logs).slope;
    return row;
  });

  std::vector<EigenRow> eig;
  Csv growth(dir / "growth.csv", "j,sigma,fitted_rate,relative_error,t_end,steps");
  for (auto& r : rows) {
    eig.push_back(r.eig);
    const std::string tag = jtag(r.eig.j);
    v.add("solved_" + tag, r.eig.ok ? 1.0 : 0.0, 1.0, Comparison::AtLeast);
    if (!r.eig.ok) {
      v.note(tag + ": " + r.eig.error);
      continue;
    }
    const double s = r.eig.res.sigma;
    const double err = std::abs(r.rate - s) / std::abs(s);
    growth.row(r.eig.j, s, r.rate, err, r.t_end, r.run->steps);
    r.run->series.write_csv((dir / ("norm_series_" + tag + ".csv")).string());
    add_run_metrics(v, tag, *r.run);
    v.add("rate_error_" + tag, err, o.rate_tol, Comparison::AtMost);
    if (r.eig.j >= o.j0) {
      v.add("cstar_floor_margin_" + tag, s - static_cast<double>(r.eig.j) * r.eig.j * cstar, 0.0,
            Comparison::AtLeast);
    }
  }
  write_eigen_csv(dir / "eigen_sweep.csv", eig, cfg.params, o.j0);
  return v;
}

Verdict illposed_demo(const ExperimentConfig& cfg, const fs::path& dir) {
  Verdict v;
  const ExperimentOptions& o = cfg.options;
  const std::vector<int> js = sweep_or(cfg, {2, 3, 4, 5});
  const RootSign sign = o.root.value_or(RootSign::Any);
  Params shape = cfg.params;
  shape.gamma = o.shape_gamma;
  const bool illposed = cfg.params.gamma < 0.5;

  std::vector<EigenRow> eig;
  double sigma_max = -std::numeric_limits<double>::infinity();
  for (int j : js) {
    eig.push_back(solve_row(j, shape, o, sign));
    if (!eig.back().ok) {
      v.add("solved_" + jtag(j), 0.0, 1.0, Comparison::AtLeast);
      v.note(jtag(j) + ": " + eig.back().error);
      return v;
    }
    sigma_max = std::max(sigma_max, eig.back().res.sigma);
  }
  write_eigen_csv(dir / "eigen_sweep.csv", eig, shape, o.j0);
  double horizon = o.horizon;
  if (horizon == 0.0) {
    if (!(sigma_max > 0.0)) {
      v.add("max_sigma", sigma_max, 0.0, Comparison::Above);
      v.note("no growing shape mode: set options.horizon explicitly");
      return v;
    }
    horizon = 1.0 / sigma_max;
  }

  const SteadyStatePair pair = steady_state_pair(cfg.params, cfg.grid);
  struct Row {
    std::optional<RunResult> run;
    double amplification = kNaN;
  };
  auto rows = parallel_map<Row>(js.size(), cfg.workers, [&](std::size_t i) {
    Row row;
    const SpectralField mode =
        synthesize_eigenmode(eig[i].res, EigenProblem{js[i], shape}, cfg.grid);
    SpectralField theta = pair.theta0;
    SpectralField pert = mode;
    pert *= o.amplitude;
    theta += pert;
    EvolutionConfig ev = cfg.evolution;
    ev.plane.reset();
    ev.enforce_plane = false;
    ev.t_end = horizon;
    ev.dt = std::min(ev.dt, horizon);
    row.run = run_nonlinear(theta, pair.source, cfg.params, ev);
    if (row.run->completed()) {
      row.amplification = l2_norm(row.run->state - pair.theta0) / l2_norm(pert);
    }
    return row;
  });

  Csv out(dir / "amplification.csv", "j,shape_sigma,horizon,amplification,rate,resolved");
  double prev = kNaN;
  for (std::size_t i = 0; i < js.size(); ++i) {
    const std::string tag = jtag(js[i]);
    const Row& r = rows[i];
    out.row(js[i], eig[i].res.sigma, horizon, r.amplification,
            std::log(r.amplification) / horizon, !r.run->under_resolved);
    r.run->series.write_csv((dir / ("norm_series_" + tag + ".csv")).string());
    add_run_metrics(v, tag, *r.run);
    if (illposed) {
      if (i > 0) {
        v.add("amplification_increase_" + tag, r.amplification - prev, 0.0, Comparison::Above);
      }
    } else {
      v.add("amplification_" + tag, r.amplification, o.bound, Comparison::AtMost);
    }
    prev = r.amplification;
  }
  v.note("horizon t = " + num(horizon) + ", perturbation size " + num(o.amplitude));
  return v;
}

Verdict local_wellposed(const ExperimentConfig& cfg, const fs::path& dir) {
  Verdict v;
  const ExperimentOptions& o = cfg.options;
  const std::vector<int> ns = sweep_or(cfg, {48, 64});
  if (cfg.params.gamma <= 0.5) v.note("gamma <= 1/2: outside the local well-posedness regime");
  EvolutionConfig ev = cfg.evolution;
  ev.adaptive_dt = false; // identical steps on every grid
  ev.plane.reset();
  ev.enforce_plane = false;
  const bool forced = o.source_l2 > 0.0;

  auto runs = parallel_map<RunResult>(ns.size(), cfg.workers, [&](std::size_t i) {
    const Grid grid(ns[i]);
    const SpectralField theta0 = random_smooth_field(grid, {cfg.seed, o.data_l2, o.data_box, {}});
    const SpectralField source =
        random_smooth_field(grid, {cfg.seed + 1, o.source_l2, o.data_box, {}});
    return run_nonlinear(theta0, source, cfg.params, ev);
  });

  Csv summary(dir / "convergence.csv", "n,final_time,final_l2,final_hs,steps");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const std::string tag = "n" + std::to_string(ns[i]);
    const RunResult& r = runs[i];
    const auto& s = r.series.samples().back();
    summary.row(ns[i], s.t, s.l2, s.hs, r.steps);
    r.series.write_csv((dir / ("norm_series_" + tag + ".csv")).string());
    add_run_metrics(v, tag, r);
    if (!forced) {
      const auto& l2 = r.series.l2();
      double rise = -std::numeric_limits<double>::infinity();
      for (std::size_t k = 1; k < l2.size(); ++k) rise = std::max(rise, l2[k] - l2[k - 1]);
      v.add("l2_max_rise_" + tag, l2.size() > 1 ? rise : 0.0, 0.0, Comparison::AtMost);
    }
    if (i > 0) {
      const double a = runs[i - 1].series.samples().back().hs;
      v.add("hs_difference_n" + std::to_string(ns[i - 1]) + "_" + tag,
            std::abs(a - s.hs) / std::abs(s.hs), o.hs_tol, Comparison::AtMost);
    }
  }
  return v;
}

Verdict smalldata_global(const ExperimentConfig& cfg, const fs::path& dir) {
  Verdict v;
  const ExperimentOptions& o = cfg.options;
  const Params& p = cfg.params;
  const double s = cfg.evolution.s;
  const SpectralField theta0 = random_smooth_field(cfg.grid, {cfg.seed, o.data_l2, o.data_box, {}});
  const SpectralField source =
      random_smooth_field(cfg.grid, {cfg.seed + 1, o.source_l2, o.data_box, {}});
  const double eps = o.epsilon.value_or(default_smallness_epsilon(p));
  try {
    const SmallnessReport rep = smallness_check(theta0, phys_sup(source), p, s, eps);
    v.add("smallness_value", rep.value, eps, Comparison::AtMost);
  } catch (const InvalidArgument& e) {
    v.add("smallness_value", kNaN, eps, Comparison::AtMost);
    v.note(std::string("smallness check rejected: ") + e.what());
  }
  EvolutionConfig ev = cfg.evolution;
  ev.plane.reset();
  ev.enforce_plane = false;
  const RunResult run = run_nonlinear(theta0, source, p, ev);
  run.series.write_csv((dir / "norm_series.csv").string());
  add_run_metrics(v, "run", run);

  const double hs0 = sobolev_norm(theta0, s);
  const double fs_norm = sobolev_norm(source, s - p.gamma);
  const double bound = hs0 * hs0 + 2.0 / (p.kappa * p.kappa) * fs_norm * fs_norm + 1e-8;
  double excess = -std::numeric_limits<double>::infinity();
  for (double h : run.series.hs()) excess = std::max(excess, h * h - bound);
  v.add("hs_bound_excess", excess, 0.0, Comparison::AtMost);
  v.note("energy bound " + num(bound) + " over t <= " + num(run.final_time));
  return v;
}

Verdict plane_support(const ExperimentConfig& cfg, const fs::path& dir) {
  Verdict v;
  const ExperimentOptions& o = cfg.options;
  const FrequencyPlane plane = cfg.plane.value_or(FrequencyPlane(1, 1));
  EvolutionConfig ev = cfg.evolution;
  ev.adaptive_dt = false;
  ev.t_end = o.steps * ev.dt;
  ev.record_every = 1;
  ev.plane = plane;
  ev.enforce_plane = false;

  auto runs = parallel_map<RunResult>(2, cfg.workers, [&](std::size_t i) {
    std::optional<FrequencyPlane> support;
    if (i == 0) support = plane;
    const SpectralField theta0 =
        random_smooth_field(cfg.grid, {cfg.seed, o.data_l2, o.data_box, support});
    const SpectralField source =
        random_smooth_field(cfg.grid, {cfg.seed + 1, o.source_l2, o.data_box, support});
    return run_nonlinear(theta0, source, cfg.params, ev);
  });
  runs[0].series.write_csv((dir / "norm_series_plane.csv").string());
  runs[1].series.write_csv((dir / "norm_series_generic.csv").string());
  add_run_metrics(v, "plane", runs[0]);
  add_run_metrics(v, "generic", runs[1]);
  v.add("max_leak_plane", runs[0].series.max_support_leak(), o.leak_max, Comparison::AtMost);
  v.add("final_leak_generic", runs[1].series.samples().back().support_leak, o.contrast_min,
        Comparison::AtLeast);
  v.note("plane " + plane.to_string() + ", " + std::to_string(runs[0].steps) + " steps");
  return v;
}

Verdict dichotomy_sweep(const ExperimentConfig& cfg, const fs::path& dir) {
  Verdict v;
  const ExperimentOptions& o = cfg.options;
  const std::vector<int> js = sweep_or(cfg, range(1, 64));
  struct Cell {
    Params p;
    double cstar = 0.0;
    int unstable = 0;
    int first_unstable = 0;
    int mismatches = 0;
    int floor_violations = 0;
  };
  std::vector<Cell> cells;
  for (double g : o.gammas) {
    for (double k : o.kappas) {
      for (double a : o.amplitudes) {
        Cell c;
        c.p = cfg.params;
        c.p.gamma = g;
        c.p.kappa = k;
        c.p.a = a;
        cells.push_back(c);
      }
    }
  }
  cells = parallel_map<Cell>(cells.size(), cfg.workers, [&](std::size_t i) {
    Cell c = cells[i];
    c.cstar = growth_constant(o.j0, c.p);
    for (int j : js) {
      const EigenRow row = solve_row(j, c.p, o, RootSign::Positive);
      if (row.ok) {
        ++c.unstable;
        if (c.first_unstable == 0) c.first_unstable = j;
      }
      if (row.ok != (c.cstar > 0.0)) ++c.mismatches;
      if (j >= o.j0 && c.cstar > 0.0 &&
          !(row.ok && row.res.sigma >= static_cast<double>(j) * j * c.cstar)) {
        ++c.floor_violations;
      }
    }
    return c;
  });

  Csv out(dir / "dichotomy.csv",
          "gamma,kappa,a,cstar,critical_kappa,unstable_count,j_count,first_unstable_j");
  for (const Cell& c : cells) {
    const double crit = c.p.gamma == 0.5 ? critical_kappa_half(c.p) : kNaN;
    out.row(c.p.gamma, c.p.kappa, c.p.a, c.cstar, crit, c.unstable, js.size(), c.first_unstable);
    const std::string tag = "gamma" + num(c.p.gamma) + "_kappa" + num(c.p.kappa) + "_a" + num(c.p.a);
    if (c.p.gamma == 0.5) {
      v.add("switch_mismatches_" + tag, c.mismatches, 0.0, Comparison::AtMost);
    } else if (c.p.gamma < 0.5 && c.cstar > 0.0) {
      v.add("floor_violations_" + tag, c.floor_violations, 0.0, Comparison::AtMost);
    }
  }
  if (v.metrics.empty()) v.note("no cell carries a checkable invariant");
  return v;
}

} // namespace

std::span<const ExperimentInfo> experiment_catalog() { return kCatalog; }

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : kCatalog) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

Verdict run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const fs::path dir(cfg.output_dir);
  fs::create_directories(dir);
  Verdict v;
  const std::string& e = cfg.experiment;
  try {
    if (e == "symbol-audit") v = symbol_audit(cfg, dir);
    else if (e == "eigen-table") v = eigen_table(cfg, dir);
    else if (e == "growth-verify") v = growth_verify(cfg, dir);
    else if (e == "illposed-demo") v = illposed_demo(cfg, dir);
    else if (e == "local-wellposed") v = local_wellposed(cfg, dir);
    else if (e == "smalldata-global") v = smalldata_global(cfg, dir);
    else if (e == "plane-support") v = plane_support(cfg, dir);
    else if (e == "dichotomy-sweep") v = dichotomy_sweep(cfg, dir);
  } catch (const InvalidArgument& err) {
    // Setup problems (e.g. an unresolvable eigenmode) fail the verdict.
    v = Verdict{};
    v.add("setup", kNaN, 0.0, Comparison::AtMost);
    v.note(err.what());
  }
  v.experiment = e;
  write_verdict_csv(v, (dir / "verdict.csv").string());
  return v;
}

void write_verdict_csv(const Verdict& v, const std::string& path) {
  Csv csv(path, "experiment,metric,value,threshold,passed");
  for (const auto& m : v.metrics) csv.row(v.experiment, m.name, m.value, m.threshold, m.passed);
}

} // namespace mgslab
