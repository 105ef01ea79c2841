#pragma once

#include "caliber/calib/plane.hpp"
#include "caliber/model/hyperkahler.hpp"

namespace caliber {

// Linear model H^n + C = R^{4n+2} of a twistor tangent space: e_{j a} at
// quat_index(j, a), then f2, f3.
class TwistorModel {
 public:
  static TwistorModel build(int n);

  int n() const { return n_; }
  int dim() const { return 4 * n_ + 2; }
  int f2() const { return 4 * n_; }
  int f3() const { return 4 * n_ + 1; }
  Vector e(int j, int a) const;
  Vector f(int which) const;  // which = 2 or 3

  const AltForm& beta(int p) const { return beta_[p - 1]; }
  const AltForm& omega_H() const { return beta_[0]; }
  const AltForm& omega_V() const { return omega_V_; }
  const AltForm& omega_KE() const { return omega_KE_; }
  const AltForm& omega_NK() const { return omega_NK_; }
  const CAltForm& gamma0() const { return gamma0_; }
  const AltForm& xi() const { return xi_; }
  // Re(e^{-i theta} gamma0)
  AltForm re_gamma_phase(double theta) const;

  const Matrix& J_plus() const { return J_plus_; }
  const Matrix& J_minus() const { return J_minus_; }
  // J2, J3 act on the horizontal space and vanish on the vertical one.
  const Matrix& J(int p) const { return Jh_[p - 1]; }
  // Complex structure of the vertical plane: f2 -> f3.
  const Matrix& J_vertical() const { return J_vertical_; }
  Matrix horizontal_projector() const;
  Matrix vertical_projector() const;

  // Linear model of p1: link frame coordinates (A1, A2, A3, horizontal) -> twistor.
  Matrix link_projection() const;

 private:
  int n_ = 0;
  std::array<AltForm, 3> beta_;
  AltForm omega_V_, omega_KE_, omega_NK_, xi_;
  CAltForm gamma0_;
  Matrix J_plus_, J_minus_, J_vertical_;
  std::array<Matrix, 3> Jh_;
};

// V_theta frame (v2, v3), unnormalized.
Matrix v_theta_frame(const TwistorModel& T, double theta);
Plane make_V_theta(const TwistorModel& T, double theta);
// W_theta = R e_{10} + V_theta.
Plane make_W_theta(const TwistorModel& T, double theta);

}  // namespace caliber
