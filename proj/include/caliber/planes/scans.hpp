#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

namespace caliber {

struct ScanResult {
  std::string id;
  std::string statement;
  int samples = 0;
  int premise_count = 0;  // samples on which the hypothesis held
  int counterexamples = 0;
  double worst = 0;  // largest witness over samples with the hypothesis
  bool pass() const { return counterexamples == 0 && premise_count > 0; }
  nlohmann::json to_json() const;
};

struct SampleOutcome {
  bool premise = false;
  bool holds = true;
  double witness = 0;
};

// Runs `sample` on `samples` independent generators seeded from (seed, salt, index),
// in parallel, and reduces in index order.
ScanResult run_scan(std::string id, std::string statement, int samples, std::uint64_t seed,
                    const std::function<SampleOutcome(std::mt19937_64&, int)>& sample);

struct ScanInfo {
  std::string id;
  std::string statement;
};

// Ids and statements of the proposition scans, sorted by id.
std::vector<ScanInfo> proposition_scan_catalog();

// One scan by id; throws InvalidArgument for an unknown id.
ScanResult run_proposition_scan(const std::string& id, int n, int samples, std::uint64_t seed);

std::vector<ScanResult> proposition_scans(int n, int samples, std::uint64_t seed);

// The literal nearly-Kahler isotropy claim for Re(gamma0)-calibrated planes; reports the
// counterexample W_0 together with a search over maximizers (expected not to hold).
ScanResult nearly_kahler_isotropy_scan(int n, int samples, std::uint64_t seed);

}  // namespace caliber
