#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mgslab/config.hpp"

namespace mgslab {

enum class Comparison { AtMost, Below, AtLeast, Above };

struct Metric {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Comparison cmp = Comparison::AtMost;
  bool passed = false;
};

struct Verdict {
  std::string experiment;
  bool passed = true;
  std::vector<Metric> metrics;
  std::vector<std::string> notes;

  /// Appends a metric; a non-finite value never passes.
  const Metric& add(std::string name, double value, double threshold, Comparison cmp);
  /// Null when absent.
  const Metric* find(std::string_view name) const;
  void note(std::string text) { notes.push_back(std::move(text)); }
};

struct ExperimentInfo {
  std::string_view name;
  std::string_view summary;
};

std::span<const ExperimentInfo> experiment_catalog();
const std::vector<std::string>& experiment_names();

/// Runs the configured experiment, writes its CSVs and verdict.csv into
/// cfg.output_dir, and returns the verdict. Failed or blown-up runs show up
/// as failing metrics, not exceptions.
Verdict run_experiment(const ExperimentConfig& cfg);

void write_verdict_csv(const Verdict& v, const std::string& path);

} // namespace mgslab
