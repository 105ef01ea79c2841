#include "caliber/model/twistor.hpp"

#include <cmath>

namespace caliber {

TwistorModel TwistorModel::build(int n) {
  if (n < 1 || n > 3) throw InvalidArgument("twistor model supports n = 1, 2, 3");
  TwistorModel T;
  T.n_ = n;
  const int N = T.dim();
  for (int p = 1; p <= 3; ++p) T.beta_[p - 1] = hk_two_form<double>(p, N, n);
  T.omega_V_ = AltForm::basis(N, {T.f2(), T.f3()});
  T.omega_KE_ = T.beta_[0] + T.omega_V_;
  T.omega_NK_ = 2.0 * T.beta_[0] - T.omega_V_;
  T.xi_ = wedge(T.beta_[1], T.beta_[1]) + wedge(T.beta_[2], T.beta_[2]);
  CAltForm tau(one_form(N, T.f2()), -one_form(N, T.f3()));
  T.gamma0_ = wedge(tau, CAltForm(T.beta_[1], T.beta_[2]));

  for (int p = 1; p <= 3; ++p) T.Jh_[p - 1] = structure_matrix(T.beta_[p - 1]);
  T.J_vertical_ = structure_matrix(T.omega_V_);
  T.J_plus_ = T.Jh_[0] + T.J_vertical_;
  T.J_minus_ = T.Jh_[0] - T.J_vertical_;
  return T;
}

Vector TwistorModel::e(int j, int a) const {
  if (j < 1 || j > n_ || a < 0 || a > 3) throw InvalidArgument("twistor basis index out of range");
  return Vector::Unit(dim(), quat_index(j, a));
}

Vector TwistorModel::f(int which) const {
  if (which != 2 && which != 3) throw InvalidArgument("vertical basis vectors are f2 and f3");
  return Vector::Unit(dim(), which == 2 ? f2() : f3());
}

AltForm TwistorModel::re_gamma_phase(double theta) const {
  return scale(std::polar(1.0, -theta), gamma0_).re;
}

Matrix TwistorModel::vertical_projector() const {
  Matrix P = Matrix::Zero(dim(), dim());
  P(f2(), f2()) = P(f3(), f3()) = 1;
  return P;
}

Matrix TwistorModel::horizontal_projector() const { return Matrix::Identity(dim(), dim()) - vertical_projector(); }

Matrix TwistorModel::link_projection() const {
  Matrix P = Matrix::Zero(dim(), dim() + 1);
  P(f2(), 1) = 1;
  P(f3(), 2) = 1;
  for (int i = 0; i < 4 * n_; ++i) P(i, 3 + i) = 1;
  return P;
}

Matrix v_theta_frame(const TwistorModel& T, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const Vector f2 = T.f(2), f3 = T.f(3), e12 = T.e(1, 2), e13 = T.e(1, 3);
  Matrix V(T.dim(), 2);
  V.col(0) = c * (-f2 - e13) + s * (-f3 - e12);
  V.col(1) = s * (-f2 + e13) + c * (-f3 + e12);
  return V;
}

Plane make_V_theta(const TwistorModel& T, double theta) { return Plane::from_frame(v_theta_frame(T, theta)); }

Plane make_W_theta(const TwistorModel& T, double theta) {
  Matrix W(T.dim(), 3);
  W.col(0) = T.e(1, 0);
  W.rightCols(2) = v_theta_frame(T, theta);
  return Plane::from_frame(W);
}

}  // namespace caliber
