#pragma once

#include <array>

#include "caliber/symforms/symbolic_form.hpp"

namespace caliber {

// Degree-0 homogeneous extensions to the cone of the structure forms of the
// link S^{4n+3}:  alpha_p = (R ⌟ omega_p) / r^2,  Omega_p = (omega_p - r dr ^ alpha_p) / r^2.
class ConicalCatalog {
 public:
  explicit ConicalCatalog(int n);

  int n() const { return n_; }
  int dim() const { return dim_; }

  const RationalForm& omega(int p) const { return omega_[p - 1]; }
  const RationalForm& alpha(int p) const { return alpha_[p - 1]; }
  const RationalForm& Omega(int p) const { return Omega_[p - 1]; }
  const RationalForm& kappa(int p) const { return kappa_[p - 1]; }
  const PolyVectorField& dilation() const { return R_; }
  // A_p = I_p R / r.
  const PolyVectorField& reeb(int p) const { return reeb_[p - 1]; }

  RationalForm alpha123() const;
  // (alpha_q + i alpha_r) ^ (Omega_q + i Omega_r)^n / n!
  CRationalForm psi(int p) const;
  // (Omega_q + i Omega_r)^m / m!
  CRationalForm sigma_link_power(int p, int m) const;
  // (alpha_q - i alpha_r) ^ (kappa_q + i kappa_r)
  CRationalForm gamma(int p) const;
  RationalForm xi(int p) const;
  RationalForm phi(int p) const;
  RationalForm omega_tilde(int p) const;
  // alpha_p ^ Omega_p^k / k!
  RationalForm cr_form(int p, int k) const;

  // Cone forms.
  RationalForm omega_power(int p, int k) const;
  CRationalForm upsilon(int p) const;
  RationalForm theta(int p, int k2) const;
  RationalForm cayley(int p) const;
  RationalForm lambda() const;
  // (R ⌟ Theta_{p,2k}) / r^{2k}
  RationalForm link_theta(int p, int k2) const;

 private:
  int n_;
  int dim_;
  std::array<RationalForm, 3> omega_, alpha_, Omega_, kappa_;
  PolyVectorField R_;
  std::array<PolyVectorField, 3> reeb_;
};

}  // namespace caliber
