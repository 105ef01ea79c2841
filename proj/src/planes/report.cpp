#include "caliber/planes/report.hpp"

#include <cmath>

#include "caliber/errors.hpp"

namespace caliber {

const char* space_name(Space s) {
  switch (s) {
    case Space::cone: return "cone";
    case Space::link: return "link";
    default: return "twistor";
  }
}

void ClassificationReport::add_flag(std::string name, bool value, double witness) {
  flags_.push_back({std::move(name), value, witness, tol});
}

void ClassificationReport::add_value(std::string name, double value) { values_.push_back({std::move(name), value}); }

void ClassificationReport::add_phase(std::string name, double re, double im) {
  ReportPhase p{std::move(name), re, im, std::nullopt};
  if (std::hypot(re, im) >= 1 - tol) p.phase = std::atan2(im, re);
  phases_.push_back(std::move(p));
}

const ReportFlag& ClassificationReport::find_flag(const std::string& name) const {
  for (const auto& f : flags_)
    if (f.name == name) return f;
  throw InvalidArgument("report has no flag " + name);
}

bool ClassificationReport::has_flag(const std::string& name) const {
  for (const auto& f : flags_)
    if (f.name == name) return true;
  return false;
}

bool ClassificationReport::flag(const std::string& name) const { return find_flag(name).value; }
double ClassificationReport::witness(const std::string& name) const { return find_flag(name).witness; }

bool ClassificationReport::has_value(const std::string& name) const {
  for (const auto& v : values_)
    if (v.name == name) return true;
  return false;
}

double ClassificationReport::value(const std::string& name) const {
  for (const auto& v : values_)
    if (v.name == name) return v.value;
  throw InvalidArgument("report has no value " + name);
}

const ReportPhase& ClassificationReport::phase(const std::string& name) const {
  for (const auto& p : phases_)
    if (p.name == name) return p;
  throw InvalidArgument("report has no phase " + name);
}

nlohmann::json ClassificationReport::to_json() const {
  nlohmann::json j;
  j["plane_id"] = plane_id;
  j["space"] = space_name(space);
  j["n"] = n;
  j["degree"] = degree;
  j["tol"] = tol;
  nlohmann::json flags = nlohmann::json::object();
  for (const auto& f : flags_) flags[f.name] = {{"value", f.value}, {"witness", f.witness}, {"tol", f.tol}};
  j["flags"] = flags;
  nlohmann::json values = nlohmann::json::object();
  for (const auto& v : values_) values[v.name] = v.value;
  j["values"] = values;
  nlohmann::json phases = nlohmann::json::object();
  for (const auto& p : phases_) {
    nlohmann::json e = {{"re", p.re}, {"im", p.im}};
    e["phase"] = p.phase ? nlohmann::json(*p.phase) : nlohmann::json(nullptr);
    phases[p.name] = e;
  }
  j["phases"] = phases;
  return j;
}

nlohmann::json to_json(const std::vector<EquivalenceCheck>& checks) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : checks)
    a.push_back({{"id", c.id}, {"premise", c.premise}, {"holds", c.holds}, {"witness", c.witness}});
  return a;
}

}  // namespace caliber
