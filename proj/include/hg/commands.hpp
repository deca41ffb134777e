#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "hg/config.hpp"

namespace hg {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitHypothesis = 2, kExitResource = 3 };

inline constexpr const char* kSchemaVersion = "1.0.0";

struct Outcome {
  int exit_code = kExitOk;
  nlohmann::json report;
};

// Each command writes report.json plus its CSV tables into cfg.out.
Outcome run_selftest(const ExperimentConfig& cfg);
Outcome run_analyze(const ExperimentConfig& cfg, bool force = false);
Outcome run_gram(const ExperimentConfig& cfg, bool force = false);
Outcome run_bessel(const ExperimentConfig& cfg, bool force = false);

struct CliOptions {
  std::string command;
  std::optional<std::string> config;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  int threads = 1;
  bool force = false;
};

int run_cli(const CliOptions& opt, std::ostream& console, std::ostream& errors);

// CSV writers (full double precision)
void write_field_csv(const std::string& path, const ScalarField& f);
void write_weight_csv(const std::string& path, const WeightTable& W);
void write_gram_csv(const std::string& path, const Eigen::MatrixXcd& M);
void write_eigs_csv(const std::string& path, const Eigen::VectorXd& e);
void write_coefficients_csv(const std::string& path, const Coefficients& c);

}  // namespace hg
