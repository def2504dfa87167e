// mgslab command line: run, validate and list experiments.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mgslab/config.hpp"
#include "mgslab/error.hpp"
#include "mgslab/experiments.hpp"

namespace {

const char* op_name(mgslab::Comparison c) {
  switch (c) {
  case mgslab::Comparison::AtMost: return "<=";
  case mgslab::Comparison::Below: return "<";
  case mgslab::Comparison::AtLeast: return ">=";
  case mgslab::Comparison::Above: return ">";
  }
  return "?";
}

void print_verdict(const mgslab::Verdict& v) {
  for (const auto& m : v.metrics) {
    std::printf("%-4s %-44s %.6g %s %.6g\n", m.passed ? "ok" : "FAIL", m.name.c_str(), m.value,
                op_name(m.cmp), m.threshold);
  }
  for (const auto& n : v.notes) std::printf("note: %s\n", n.c_str());
  std::printf("%s: %s\n", v.experiment.c_str(), v.passed ? "PASSED" : "FAILED");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical experiments for the fractionally diffusive MG equation"};
  app.require_subcommand(1);

  std::string config_path, output_dir;
  int workers = 0;
  auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
  run->add_option("config", config_path, "JSON config file")->required();
  run->add_option("--output-dir", output_dir, "Directory for CSV outputs (overrides config)");
  run->add_option("--workers", workers, "Concurrent runs within a sweep (overrides config)")
      ->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("list-experiments", "List experiment names");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Parse and validate a config file");
  validate->add_option("config", validate_path, "JSON config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      for (const auto& e : mgslab::experiment_catalog()) {
        std::printf("%-18s %.*s\n", std::string(e.name).c_str(), static_cast<int>(e.summary.size()),
                    e.summary.data());
      }
      return 0;
    }
    if (*validate) {
      const auto cfg = mgslab::load_config(validate_path);
      std::printf("valid: %s\n", cfg.experiment.c_str());
      return 0;
    }
    auto cfg = mgslab::load_config(config_path);
    if (!output_dir.empty()) cfg.output_dir = output_dir;
    if (workers > 0) cfg.workers = workers;
    const auto verdict = mgslab::run_experiment(cfg);
    print_verdict(verdict);
    std::printf("outputs in %s\n", cfg.output_dir.c_str());
    return verdict.passed ? 0 : 1;
  } catch (const mgslab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
