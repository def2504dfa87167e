#include "mgslab/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mgslab/error.hpp"
#include "mgslab/experiments.hpp"

namespace mgslab {

namespace {

using Json = nlohmann::json;

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

/// Reads keys from one JSON object, remembering which were consumed so the
/// rest can be reported as unknown.
class Section {
public:
  Section(const Json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw ConfigError(path_, "expected an object");
  }

  const std::string& path() const { return path_; }

  const Json* find(const std::string& key) {
    auto it = node_.find(key);
    if (it == node_.end()) return nullptr;
    used_.insert(key);
    return &*it;
  }

  bool read(const std::string& key, double& out) {
    const Json* v = find(key);
    if (!v) return false;
    if (!v->is_number()) throw ConfigError(join(path_, key), "expected a number");
    out = v->get<double>();
    return true;
  }

  bool read(const std::string& key, int& out) {
    const Json* v = find(key);
    if (!v) return false;
    out = as_int(*v, join(path_, key));
    return true;
  }

  bool read(const std::string& key, bool& out) {
    const Json* v = find(key);
    if (!v) return false;
    if (!v->is_boolean()) throw ConfigError(join(path_, key), "expected true or false");
    out = v->get<bool>();
    return true;
  }

  bool read(const std::string& key, std::string& out) {
    const Json* v = find(key);
    if (!v) return false;
    if (!v->is_string()) throw ConfigError(join(path_, key), "expected a string");
    out = v->get<std::string>();
    return true;
  }

  bool read(const std::string& key, std::uint64_t& out) {
    const Json* v = find(key);
    if (!v) return false;
    if (!v->is_number_unsigned()) {
      throw ConfigError(join(path_, key), "expected a nonnegative integer");
    }
    out = v->get<std::uint64_t>();
    return true;
  }

  bool read(const std::string& key, std::vector<int>& out) {
    const Json* v = find(key);
    if (!v) return false;
    const std::string p = join(path_, key);
    if (!v->is_array()) throw ConfigError(p, "expected an array of integers");
    out.clear();
    for (std::size_t i = 0; i < v->size(); ++i) {
      out.push_back(as_int((*v)[i], p + "[" + std::to_string(i) + "]"));
    }
    return true;
  }

  bool read(const std::string& key, std::vector<double>& out) {
    const Json* v = find(key);
    if (!v) return false;
    const std::string p = join(path_, key);
    if (!v->is_array()) throw ConfigError(p, "expected an array of numbers");
    out.clear();
    for (std::size_t i = 0; i < v->size(); ++i) {
      if (!(*v)[i].is_number()) {
        throw ConfigError(p + "[" + std::to_string(i) + "]", "expected a number");
      }
      out.push_back((*v)[i].get<double>());
    }
    return true;
  }

  void finish() const {
    for (auto it = node_.begin(); it != node_.end(); ++it) {
      if (!used_.count(it.key())) throw ConfigError(join(path_, it.key()), "unknown key");
    }
  }

private:
  static int as_int(const Json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
    const auto x = v.get<std::int64_t>();
    if (x < INT32_MIN || x > INT32_MAX) throw ConfigError(path, "integer out of range");
    return static_cast<int>(x);
  }

  const Json& node_;
  std::string path_;
  std::set<std::string> used_;
};

/// Core validators phrase messages as "<field> must ..."; the leading word
/// names the key.
[[noreturn]] void rethrow_under(const std::string& section, const InvalidArgument& e) {
  const std::string msg = e.what();
  const std::string field = msg.substr(0, msg.find(' '));
  throw ConfigError(join(section, field), msg);
}

Params read_params(const Json& node) {
  Section s(node, "params");
  Params p;
  s.read("omega", p.omega);
  const bool has_beta = s.read("beta", p.beta);
  const bool has_eta = s.read("eta", p.eta);
  const bool has_mu = s.read("mu", p.mu);
  s.read("kappa", p.kappa);
  s.read("gamma", p.gamma);
  s.read("a", p.a);
  s.read("m", p.m);
  s.finish();
  if (has_mu && !has_beta && !has_eta) {
    p.eta = 1.0;
    p.beta = std::sqrt(p.mu);
  } else if (!has_mu) {
    p.mu = p.beta * p.beta / p.eta;
  }
  try {
    p.validate();
  } catch (const InvalidArgument& e) {
    rethrow_under("params", e);
  }
  return p;
}

Grid read_grid(const Json& node) {
  Section s(node, "grid");
  int n = 0, n1 = 0, n2 = 0, n3 = 0;
  const bool cube = s.read("n", n);
  const bool a1 = s.read("n1", n1), a2 = s.read("n2", n2), a3 = s.read("n3", n3);
  s.finish();
  if (cube && (a1 || a2 || a3)) throw ConfigError("grid", "give either n or n1/n2/n3");
  if (!cube && !(a1 && a2 && a3)) throw ConfigError("grid", "give n or all of n1, n2, n3");
  if (cube) n1 = n2 = n3 = n;
  const int sizes[3] = {n1, n2, n3};
  for (int axis = 0; axis < 3; ++axis) {
    if (sizes[axis] < 4 || sizes[axis] % 2 != 0) {
      throw ConfigError(cube ? "grid.n" : "grid.n" + std::to_string(axis + 1),
                        "grid sizes must be even and >= 4");
    }
  }
  return Grid(n1, n2, n3);
}

EvolutionConfig read_evolution(const Json& node) {
  Section s(node, "evolution");
  EvolutionConfig e;
  s.read("dt", e.dt);
  s.read("t_end", e.t_end);
  s.read("s", e.s);
  s.read("record_every", e.record_every);
  s.read("enforce_plane", e.enforce_plane);
  s.read("adaptive_dt", e.adaptive_dt);
  s.read("cfl", e.cfl);
  s.read("norm_ceiling", e.norm_ceiling);
  s.finish();
  return e;
}

FrequencyPlane read_plane(const Json& node) {
  Section s(node, "plane");
  int j1 = 1, j2 = 1;
  if (!s.read("j1", j1)) throw ConfigError("plane.j1", "missing");
  if (!s.read("j2", j2)) throw ConfigError("plane.j2", "missing");
  s.finish();
  if (j1 == 0) throw ConfigError("plane.j1", "plane j1 must be nonzero");
  try {
    return FrequencyPlane(j1, j2);
  } catch (const InvalidArgument& e) {
    throw ConfigError("plane", e.what());
  }
}

ExperimentOptions read_options(const Json& node) {
  Section s(node, "options");
  ExperimentOptions o;
  s.read("symbol_k", o.symbol_k);
  s.read("param_sets", o.param_sets);
  s.read("probe_r", o.probe_r);
  s.read("probe_k1", o.probe_k1);
  s.read("depth", o.depth);
  std::string root;
  if (s.read("root", root)) {
    if (root == "positive") {
      o.root = RootSign::Positive;
    } else if (root == "any") {
      o.root = RootSign::Any;
    } else {
      throw ConfigError("options.root", "root must be \"positive\" or \"any\"");
    }
  }
  s.read("j0", o.j0);
  s.read("efolds", o.efolds);
  s.read("rate_tol", o.rate_tol);
  s.read("amplitude", o.amplitude);
  s.read("horizon", o.horizon);
  s.read("shape_gamma", o.shape_gamma);
  s.read("bound", o.bound);
  s.read("data_l2", o.data_l2);
  s.read("data_box", o.data_box);
  s.read("source_l2", o.source_l2);
  double eps = 0.0;
  if (s.read("epsilon", eps)) o.epsilon = eps;
  s.read("steps", o.steps);
  s.read("leak_max", o.leak_max);
  s.read("contrast_min", o.contrast_min);
  s.read("hs_tol", o.hs_tol);
  s.read("gammas", o.gammas);
  s.read("kappas", o.kappas);
  s.read("amplitudes", o.amplitudes);
  s.finish();
  return o;
}

void require(bool ok, const std::string& path, const std::string& what) {
  if (!ok) throw ConfigError(path, what);
}

} // namespace

void ExperimentConfig::validate() const {
  const auto& names = experiment_names();
  require(std::find(names.begin(), names.end(), experiment) != names.end(), "experiment",
          "unknown experiment \"" + experiment + "\" (see list-experiments)");
  try {
    params.validate();
  } catch (const InvalidArgument& e) {
    rethrow_under("params", e);
  }
  try {
    evolution.validate();
  } catch (const InvalidArgument& e) {
    rethrow_under("evolution", e);
  }
  require(workers >= 1, "workers", "workers must be >= 1");
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    require(sweep[i] >= 1, "sweep[" + std::to_string(i) + "]", "sweep entries must be >= 1");
  }
  require(!output_dir.empty(), "output_dir", "output_dir must be nonempty");

  const ExperimentOptions& o = options;
  require(o.symbol_k >= 2, "options.symbol_k", "symbol_k must be >= 2");
  require(o.param_sets >= 1, "options.param_sets", "param_sets must be >= 1");
  for (double r : o.probe_r) require(r > 0.0 && r <= 0.5, "options.probe_r", "probe_r must lie in (0,1/2]");
  require(o.probe_k1.size() >= 4, "options.probe_k1", "probe_k1 needs at least 4 values");
  for (std::size_t i = 0; i < o.probe_k1.size(); ++i) {
    require(o.probe_k1[i] >= 16 && (i == 0 || o.probe_k1[i] > o.probe_k1[i - 1]),
            "options.probe_k1", "probe_k1 must be strictly increasing and >= 16");
  }
  require(o.depth >= 3, "options.depth", "depth must be >= 3");
  require(o.j0 >= 1, "options.j0", "j0 must be >= 1");
  require(o.efolds > 0.0, "options.efolds", "efolds must be positive");
  require(o.rate_tol > 0.0, "options.rate_tol", "rate_tol must be positive");
  require(o.amplitude > 0.0, "options.amplitude", "amplitude must be positive");
  require(o.horizon >= 0.0, "options.horizon", "horizon must be nonnegative");
  require(o.shape_gamma > 0.0 && o.shape_gamma <= 1.0, "options.shape_gamma",
          "shape_gamma must lie in (0,1]");
  require(o.bound > 0.0, "options.bound", "bound must be positive");
  require(o.data_l2 >= 0.0, "options.data_l2", "data_l2 must be nonnegative");
  require(o.data_box >= 1, "options.data_box", "data_box must be >= 1");
  require(o.source_l2 >= 0.0, "options.source_l2", "source_l2 must be nonnegative");
  require(!o.epsilon || *o.epsilon > 0.0, "options.epsilon", "epsilon must be positive");
  require(o.steps >= 1, "options.steps", "steps must be >= 1");
  require(o.leak_max > 0.0, "options.leak_max", "leak_max must be positive");
  require(o.contrast_min >= 0.0, "options.contrast_min", "contrast_min must be nonnegative");
  require(o.hs_tol > 0.0, "options.hs_tol", "hs_tol must be positive");
  for (double g : o.gammas) require(g > 0.0 && g <= 1.0, "options.gammas", "gamma must lie in (0,1]");
  for (double k : o.kappas) require(k >= 0.0, "options.kappas", "kappa must be nonnegative");
  for (double a : o.amplitudes) require(a > 0.0, "options.amplitudes", "amplitudes must be positive");
}

ExperimentConfig parse_config(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  Section top(doc, "");
  ExperimentConfig cfg;
  if (!top.read("experiment", cfg.experiment)) throw ConfigError("experiment", "missing");
  if (const Json* v = top.find("params")) cfg.params = read_params(*v);
  if (const Json* v = top.find("grid")) cfg.grid = read_grid(*v);
  if (const Json* v = top.find("evolution")) cfg.evolution = read_evolution(*v);
  top.read("sweep", cfg.sweep);
  if (const Json* v = top.find("plane")) cfg.plane = read_plane(*v);
  top.read("output_dir", cfg.output_dir);
  top.read("seed", cfg.seed);
  top.read("workers", cfg.workers);
  if (const Json* v = top.find("options")) cfg.options = read_options(*v);
  top.finish();
  cfg.evolution.plane = cfg.plane;
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

} // namespace mgslab
