#pragma once

#include <array>

#include "caliber/model/hyperkahler.hpp"

namespace caliber {

// Structure of the 3-Sasakian link S^{4n+3} at a point x, written in the
// orthonormal tangent basis (A1, A2, A3, h1, I1 h1, I2 h1, I3 h1, h2, ...).
class LinkFrame {
 public:
  LinkFrame(int n, const Vector& x);
  explicit LinkFrame(int n);  // base point e_{10}

  int n() const { return n_; }
  int dim() const { return 4 * n_ + 3; }
  const HKModel& cone() const { return hk_; }
  const Vector& point() const { return x_; }
  // N x (N-1) matrix whose columns are the tangent basis in cone coordinates.
  const Matrix& frame() const { return F_; }
  Vector reeb(int p) const { return F_.col(p - 1); }
  // Frame coordinates of a tangent vector given in cone coordinates, and back.
  Vector to_frame(const Vector& v) const { return F_.transpose() * v; }
  Vector to_cone(const Vector& v) const { return F_ * v; }
  // Tangent part of I_p in frame coordinates.
  const Matrix& J(int p) const { return J_[p - 1]; }
  // Orthogonal projectors (frame coordinates) onto the horizontal and vertical spaces.
  Matrix horizontal_projector() const;
  Matrix vertical_projector() const;

  const AltForm& alpha(int p) const { return alpha_[p - 1]; }
  const AltForm& Omega(int p) const { return Omega_[p - 1]; }
  const AltForm& kappa(int p) const { return kappa_[p - 1]; }
  AltForm alpha123() const;
  CAltForm psi(int p) const;
  CAltForm sigma_power(int p, int m) const;  // (Omega_q + i Omega_r)^m / m!
  CAltForm gamma(int p) const;
  AltForm xi(int p) const;
  AltForm phi(int p) const;
  AltForm omega_tilde(int p) const;
  AltForm cr_form(int p, int k) const;  // alpha_p ^ Omega_p^k / k!
  // theta_{p, 2k-1} = (x ⌟ Theta_{p, 2k}) restricted to the tangent space.
  AltForm theta(int p, int degree) const;
  // Restriction of the contraction of a cone form with the position vector.
  AltForm link_part(const AltForm& cone_form) const;
  CAltForm link_part(const CAltForm& cone_form) const;
  AltForm restrict(const AltForm& cone_form) const { return pullback(cone_form, F_); }

 private:
  int n_;
  HKModel hk_;
  Vector x_;
  Matrix F_;
  std::array<Matrix, 3> J_;
  std::array<AltForm, 3> alpha_, Omega_, kappa_;
};

// Squashed associative forms on the n = 1 link: (-phi^-_{1,t}, phi^+_{1,t}).
std::pair<AltForm, AltForm> make_squashed_associative(const LinkFrame& L, double t);

}  // namespace caliber
