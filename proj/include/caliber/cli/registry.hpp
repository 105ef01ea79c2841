#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caliber/exterior/alt_form.hpp"
#include "caliber/planes/report.hpp"

namespace caliber {

struct NamedForm {
  std::string name;
  Space space = Space::cone;
  int n = 0;
  std::string description;
  CAltForm form;
  bool complex = false;  // false when the imaginary part is identically zero by construction
};

std::optional<Space> parse_space(const std::string& s);

// Registry names for a space and n, in registry order.
std::vector<std::string> form_names(Space space, int n);

// Resolves a name; without a space every space is searched (names are unique across spaces).
// Throws InvalidArgument for unknown names or unsupported n.
NamedForm resolve_form(const std::string& name, int n, std::optional<Space> space = std::nullopt);

// The catalog with term counts.
nlohmann::json forms_catalog(Space space, int n);

}  // namespace caliber
