#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "halfshift/io.hpp"
#include "halfshift/sequence.hpp"

namespace halfshift {

// Configuration of a verification run. Mirrors the optional JSON config file:
//   {"seed": 42, "n_list": [2, 4], "w_list": [0.25], "tol": 1e-9,
//    "cases": 25, "search_samples": 1000, "only": "lemma4",
//    "format": "json", "out": "report.json"}
struct RunConfig {
  std::uint64_t seed = 42;
  std::vector<int> n_list{2, 4, 8, 16};
  std::vector<double> w_list{0.1, 0.2, 0.3, 0.4, 0.5};
  // When set, replaces the built-in tolerance of every check.
  std::optional<double> tol;
  int cases = 25;            // random sequences per (N, W) case
  int search_samples = 1000; // random sequences per N in the optimality search
  std::optional<std::string> only;
  OutputFormat output_format = OutputFormat::json;
  std::optional<std::filesystem::path> output_path;

  // Throws ParameterError on odd N, W outside (0, 0.5], tol <= 0, unknown check.
  void validate() const;
};

// Reads the JSON config file; keys absent from the file keep their defaults.
RunConfig load_run_config(const std::filesystem::path& path);

// Names accepted by RunConfig::only, in execution order.
const std::vector<std::string>& verification_checks();

// One verification measurement. A row passes when value <= tolerance;
// "info" rows are reported but never gate the run.
struct ReportRow {
  std::string check;
  std::string case_label;
  std::string metric;
  double value = 0.0;
  double tolerance = 0.0;
  std::string status;  // "pass", "fail" or "info"
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<ReportRow> rows;

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
  Table to_table() const;
};

VerificationReport run_verification(const RunConfig& config);

// Unit-energy complex sequence with i.i.d. Gaussian real and imaginary parts.
Sequence random_unit_sequence(int order, std::mt19937_64& rng);

// Per-check generator seeded from the master seed and a label, so a check
// draws the same samples whether it runs alone or in the full suite.
std::mt19937_64 derived_rng(std::uint64_t seed, const std::string& label);

}  // namespace halfshift
