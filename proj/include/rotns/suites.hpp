#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rotns/io/report.hpp"

namespace rotns {

/// One measured quantity compared against a pinned bound.
struct Check {
  std::string name;
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  /// (file stem, table) pairs; file names are <suite>_<stem>.csv.
  std::vector<std::pair<std::string, CsvTable>> tables;

  bool passed() const;
  /// check,value,lower,upper,pass
  CsvTable check_table() const;
  /// Rendered CSV files keyed by file name, checks table first.
  std::vector<std::pair<std::string, std::string>> rendered() const;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  int ensemble_size = 10;
};

/// partition, semigroup, decay, oscillation, bilinear, picard, energy, weights.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite; throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

/// Writes every rendered table of `result` into `dir` (created if missing).
void write_suite(const SuiteResult& result, const std::string& dir);

}  // namespace rotns
