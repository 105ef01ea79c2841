#include "caliber/planes/normal_form.hpp"

#include <cmath>
#include <numbers>

#include "caliber/calib/semicalibration.hpp"
#include "caliber/planes/classify.hpp"

namespace caliber {

namespace {

void require_calibrated(const Plane& E, const TwistorModel& T, double tol) {
  if (E.dim() != T.dim()) throw DimensionMismatch("plane does not live in the twistor tangent space");
  if (E.degree() != 3) throw InvalidArgument("normal form is defined for 3-planes");
  if (!is_calibrated(T.gamma0().re, E, tol)) throw PreconditionFailed("plane is not Re(gamma0)-calibrated");
}

nlohmann::json matrix_rows(const Matrix& M) {
  nlohmann::json rows = nlohmann::json::array();
  for (int j = 0; j < M.cols(); ++j) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < M.rows(); ++i) row.push_back(M(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

QuaternionicEnvelope quaternionic_envelope(const Plane& E, const TwistorModel& T, double tol) {
  require_calibrated(E, T, tol);
  const Matrix H = T.horizontal_projector() * E.frame();
  Eigen::JacobiSVD<Matrix> svd(H, Eigen::ComputeThinU);
  if (svd.singularValues()(0) <= tol) throw InternalInconsistency("calibrated plane has no horizontal component");
  Vector w = svd.matrixU().col(0);
  for (int i = 0; i < w.size(); ++i)
    if (std::abs(w(i)) > 1e-12) {
      if (w(i) < 0) w = -w;
      break;
    }
  QuaternionicEnvelope out;
  out.basis.resize(T.dim(), 4);
  out.basis.col(0) = w;
  for (int p = 1; p <= 3; ++p) out.basis.col(p) = T.J(p) * w;
  out.residual = (H - out.basis * (out.basis.transpose() * H)).norm();
  return out;
}

NormalFormResult normal_form_theta(const Plane& E, const TwistorModel& T, double tol) {
  require_calibrated(E, T, tol);
  const Matrix& U = E.frame();
  NormalFormResult r;
  r.dim_horizontal = 3 - numeric_rank(T.vertical_projector() * U, tol);
  r.dim_vertical = 3 - numeric_rank(T.horizontal_projector() * U, tol);
  if (r.dim_horizontal == 0) throw InternalInconsistency("calibrated plane meets the horizontal space trivially");
  r.envelope = quaternionic_envelope(E, T, tol);

  const Matrix M = U.transpose() * skew_matrix(T.omega_KE()) * U;
  Eigen::JacobiSVD<Matrix> sm(M);
  r.cos_2theta = sm.singularValues()(0);
  const Matrix JU = T.J_plus() * U;
  Eigen::JacobiSVD<Matrix> ss(JU - U * (U.transpose() * JU));
  r.sin_2theta = ss.singularValues()(ss.singularValues().size() - 1);
  r.theta = 0.5 * std::atan2(r.sin_2theta, r.cos_2theta);

  r.ke_isotropic = r.cos_2theta <= tol;
  const Matrix Pr = E.projector(), PH = T.horizontal_projector();
  Eigen::JacobiSVD<Matrix> sc(Pr * PH - PH * Pr);
  r.hv_compatible = sc.singularValues()(0) <= tol;
  r.quarter_turn = std::abs(r.theta - std::numbers::pi / 4) <= tol;
  const bool two = r.dim_horizontal == 2;
  r.consistent = two == r.hv_compatible && two == r.ke_isotropic && two == r.quarter_turn;
  return r;
}

nlohmann::json NormalFormResult::to_json() const {
  return {{"theta", theta},
          {"cos_2theta", cos_2theta},
          {"sin_2theta", sin_2theta},
          {"envelope", {{"basis", matrix_rows(envelope.basis)}, {"residual", envelope.residual}}},
          {"hv_flags",
           {{"dim_E_cap_H", dim_horizontal}, {"dim_E_cap_V", dim_vertical}, {"ke_isotropic", ke_isotropic}}},
          {"hv_compatible", hv_compatible},
          {"quarter_turn", quarter_turn},
          {"consistent", consistent}};
}

PhaseRigidityReport phase_rigidity_scan(const TwistorModel& T, const std::vector<double>& thetas,
                                        const ComassParams& params, double margin) {
  PhaseRigidityReport rep;
  rep.margin = margin;
  rep.gap = 1;
  rep.rigid = true;
  for (double th : thetas) {
    PhaseRigidityEntry e;
    e.theta = th;
    e.value = comass_search(T.re_gamma_phase(th), 3, params).value;
    const double turns = th / std::numbers::pi;
    e.phase_allowed = std::abs(turns - std::round(turns)) <= 1e-12;
    if (e.phase_allowed) {
      e.meets_expectation = std::abs(e.value - 1) <= 1e-6;
    } else {
      e.meets_expectation = e.value <= 1 - margin;
      rep.gap = std::min(rep.gap, 1 - e.value);
    }
    rep.rigid = rep.rigid && e.meets_expectation;
    rep.entries.push_back(e);
  }
  return rep;
}

nlohmann::json PhaseRigidityReport::to_json() const {
  nlohmann::json entries_json = nlohmann::json::array();
  for (const auto& e : entries)
    entries_json.push_back({{"theta", e.theta},
                            {"value", e.value},
                            {"phase_allowed", e.phase_allowed},
                            {"meets_expectation", e.meets_expectation}});
  return {{"margin", margin}, {"gap", gap}, {"rigid", rigid}, {"entries", entries_json}};
}

}  // namespace caliber
