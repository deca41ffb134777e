#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hg/analysis.hpp"
#include "hg/presets.hpp"

namespace hg {

struct config_error : std::runtime_error {
  std::vector<std::string> problems;
  explicit config_error(std::vector<std::string> p);
};

struct ExperimentConfig {
  RStarGrid rgrid;
  SymbolGrid zgrid;
  XiGrid xigrid;
  GaborParams gabor;
  PresetSpec preset;

  double tol_orth = 1e-8;
  double tol_class = 1e-6;
  double tol_oracle = 1e-6;
  double floor_rel = 1e-6;
  double support_rel = 1e-10;
  double parity_weight = kParityWeight;

  BesselOptions bessel;
  int bessel_trials = 50;
  int energy_trials = 20;
  int gram_max_members = 2000;

  std::uint64_t seed = 0;
  std::string out = "out";

  // resolved key/value pairs, echoed into reports
  std::map<std::string, std::string> resolved;
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

// Defaults used by `selftest` when no config is given.
ExperimentConfig default_config();

}  // namespace hg
