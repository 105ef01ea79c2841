#pragma once

#include <string>
#include <vector>

namespace caliber {

struct IdentityResult {
  std::string name;
  std::string statement;
  std::size_t residual_terms = 0;
  std::string leading;
  bool pass() const { return residual_terms == 0; }
};

struct DescentResult {
  std::string name;
  bool contraction_vanishes = false;
  bool derivative_contraction_vanishes = false;
  bool expected_to_descend = false;
  bool pass() const { return (contraction_vanishes && derivative_contraction_vanishes) == expected_to_descend; }
};

// Exterior-derivative identities of the 3-Sasakian link, exact on the cone.
std::vector<IdentityResult> structure_identities(int n);

// Semibasic tests for the first Reeb field: R1 ⌟ f = 0 and R1 ⌟ df = 0.
std::vector<DescentResult> descent_checks(int n);

// Cone decompositions f = dr ^ (r^{k-1} a) + r^k b and the potential round trip.
std::vector<IdentityResult> cone_reconstructions(int n);

}  // namespace caliber
