#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace caliber {

enum class Space { cone, link, twistor };
const char* space_name(Space s);

struct ReportFlag {
  std::string name;
  bool value = false;
  double witness = 0;
  double tol = 0;
};

struct ReportValue {
  std::string name;
  double value = 0;
};

// Phase of a complex calibration on the plane; present only when |f(P)| >= 1 - tol.
struct ReportPhase {
  std::string name;
  double re = 0;
  double im = 0;
  std::optional<double> phase;
};

class ClassificationReport {
 public:
  std::string plane_id;
  Space space = Space::cone;
  int n = 0;
  int degree = 0;
  double tol = 0;

  void add_flag(std::string name, bool value, double witness);
  void add_value(std::string name, double value);
  void add_phase(std::string name, double re, double im);

  bool has_flag(const std::string& name) const;
  bool flag(const std::string& name) const;
  double witness(const std::string& name) const;
  double value(const std::string& name) const;
  bool has_value(const std::string& name) const;
  const ReportPhase& phase(const std::string& name) const;

  const std::vector<ReportFlag>& flags() const { return flags_; }
  const std::vector<ReportValue>& values() const { return values_; }
  const std::vector<ReportPhase>& phases() const { return phases_; }

  nlohmann::json to_json() const;

 private:
  const ReportFlag& find_flag(const std::string& name) const;
  std::vector<ReportFlag> flags_;
  std::vector<ReportValue> values_;
  std::vector<ReportPhase> phases_;
};

// One implication or equivalence evaluated on a single plane.
struct EquivalenceCheck {
  std::string id;
  bool premise = false;  // false means the check holds vacuously
  bool holds = true;
  double witness = 0;
};

nlohmann::json to_json(const std::vector<EquivalenceCheck>& checks);

}  // namespace caliber
