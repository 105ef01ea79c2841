#pragma once

#include <vector>

#include "caliber/calib/comass.hpp"
#include "caliber/model/twistor.hpp"

namespace caliber {

struct QuaternionicEnvelope {
  Matrix basis;          // columns w, J1 w, J2 w, J3 w
  double residual = 0;   // distance of the horizontal projection of E from span(basis)
};

// w is the top left singular vector of the horizontal projection of E, with its first
// nonzero coordinate positive. Throws PreconditionFailed if E is not Re(gamma0)-calibrated.
QuaternionicEnvelope quaternionic_envelope(const Plane& E, const TwistorModel& T, double tol = 1e-8);

struct NormalFormResult {
  double theta = 0;       // in [0, pi/4]
  double cos_2theta = 0;  // top singular value of omega_KE on E
  double sin_2theta = 0;  // smallest singular value of (1 - P_E) J_plus on E
  QuaternionicEnvelope envelope;
  int dim_horizontal = 0;  // dim E ∩ H
  int dim_vertical = 0;    // dim E ∩ V
  bool ke_isotropic = false;
  bool hv_compatible = false;
  bool quarter_turn = false;  // theta = pi/4
  // The four conditions dim E ∩ H = 2, HV splitting, omega_KE-isotropy, theta = pi/4 agree.
  bool consistent = false;

  nlohmann::json to_json() const;
};

// Throws PreconditionFailed if E is not calibrated, InternalInconsistency if E ∩ H = 0.
NormalFormResult normal_form_theta(const Plane& E, const TwistorModel& T, double tol = 1e-8);

struct PhaseRigidityEntry {
  double theta = 0;
  double value = 0;  // comass search result for Re(e^{-i theta} gamma0)
  bool phase_allowed = false;  // theta in {0, pi}
  bool meets_expectation = false;
};

struct PhaseRigidityReport {
  double margin = 0;
  std::vector<PhaseRigidityEntry> entries;
  // Smallest 1 - value over the excluded phases.
  double gap = 0;
  bool rigid = false;

  nlohmann::json to_json() const;
};

// Allowed phases must reach 1 within 1e-6; every other phase must stay below 1 - margin.
PhaseRigidityReport phase_rigidity_scan(const TwistorModel& T, const std::vector<double>& thetas,
                                        const ComassParams& params, double margin = 1e-3);

}  // namespace caliber
