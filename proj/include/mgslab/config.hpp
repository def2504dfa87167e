#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgslab/evolution.hpp"
#include "mgslab/grid.hpp"
#include "mgslab/instability.hpp"
#include "mgslab/params.hpp"

namespace mgslab {

/// Experiment-specific knobs. Unset optionals fall back to the experiment's
/// own default (see README for the table).
struct ExperimentOptions {
  // symbol-audit
  int symbol_k = 32;
  int param_sets = 3;
  std::vector<double> probe_r{0.25, 0.5};
  std::vector<int> probe_k1{16, 32, 64, 128, 256, 512};
  // eigen-table, growth-verify, illposed-demo, dichotomy-sweep
  int depth = 40;
  std::optional<RootSign> root;
  int j0 = 2;
  // growth-verify
  double efolds = 2.0;
  double rate_tol = 0.02;
  // illposed-demo
  double amplitude = 1e-4;
  double horizon = 0.0; ///< 0: 1 / max_j sigma^(j)
  double shape_gamma = 0.25;
  double bound = 10.0;
  // seeded data (local-wellposed, smalldata-global, plane-support)
  double data_l2 = 1e-2;
  int data_box = 4;
  double source_l2 = 0.0;
  // smalldata-global
  std::optional<double> epsilon; ///< default 0.01 kappa
  // plane-support
  int steps = 200;
  double leak_max = 1e-10;
  double contrast_min = 1e-3;
  // local-wellposed
  double hs_tol = 1e-6;
  // dichotomy-sweep
  std::vector<double> gammas{0.25, 0.5, 0.75};
  std::vector<double> kappas{0.02, 0.05, 0.1};
  std::vector<double> amplitudes{1.0};
};

struct ExperimentConfig {
  std::string experiment;
  Params params;
  Grid grid{32};
  EvolutionConfig evolution;
  std::vector<int> sweep; ///< j values or grid sizes; empty means the experiment default
  std::optional<FrequencyPlane> plane;
  std::string output_dir = "out";
  std::uint64_t seed = 1;
  int workers = 1;
  ExperimentOptions options;

  /// Throws ConfigError with the dotted path of the offending key.
  void validate() const;
};

/// Parses a JSON document. Unknown keys are rejected; errors carry the path.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

} // namespace mgslab
