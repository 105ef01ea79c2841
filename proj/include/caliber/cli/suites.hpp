#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace caliber {

struct CheckRecord {
  std::string id;
  bool pass = false;
  double witness = 0;  // residual, worst deviation or counterexample count
  std::optional<double> tol;
  nlohmann::json detail;
  std::optional<double> elapsed_ms;  // empty for checks computed as one batch
};

// A faithfully implemented statement that is known not to hold; reported but not counted.
struct Finding {
  std::string id;
  std::string summary;
  bool holds = false;
  nlohmann::json detail;
};

struct SuiteOptions {
  int n = 1;
  std::uint64_t seed = 0;
  int restarts = 200;
  int samples = 10000;
};

struct SuiteReport {
  std::string suite;
  SuiteOptions options;
  std::vector<CheckRecord> checks;  // sorted by id
  std::vector<Finding> findings;    // sorted by id
  double elapsed_ms = 0;

  bool pass() const;
  nlohmann::json to_json(bool timing) const;
  std::string to_text(bool timing) const;
};

struct CoverageEntry {
  std::string statement;
  std::string suite;
  std::vector<std::string> patterns;  // check or finding ids containing one of these cover the statement
};

const std::vector<CoverageEntry>& coverage_entries();
nlohmann::json coverage_table(const SuiteReport& report);

std::vector<std::string> suite_names();

// Throws InvalidArgument for an unknown suite or an unsupported n.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& options);

}  // namespace caliber
