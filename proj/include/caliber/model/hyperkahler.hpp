#pragma once

#include <array>

#include "caliber/exterior/alt_form.hpp"
#include "caliber/model/cone_forms.hpp"

namespace caliber {

// Coordinate of e_{j a} (j = 1.., a = 0..3) in a sum of quaternionic blocks.
inline int quat_index(int j, int a) { return 4 * (j - 1) + a; }

// Matrix of the structure whose Kahler form is `two_form`: omega(X, Y) = <I X, Y>.
Matrix structure_matrix(const AltForm& two_form);
// Inverse of structure_matrix: the 2-form X, Y -> <J X, Y>.
AltForm kahler_form(const Matrix& J);

// The flat hyperkahler cone H^{n+1} = R^{4n+4}.
class HKModel {
 public:
  static HKModel build(int n);

  int n() const { return forms_.n; }
  int dim() const { return forms_.dim; }
  const Matrix& I(int p) const { return I_[p - 1]; }
  const ConeForms<double>& forms() const { return forms_; }

  const AltForm& omega(int p) const { return forms_.omega[p - 1]; }
  const CAltForm& sigma(int p) const { return forms_.sigma[p - 1]; }
  AltForm omega_power(int p, int k) const { return forms_.omega_power(p, k); }
  CAltForm sigma_power(int p, int k) const { return forms_.sigma_power(p, k); }
  CAltForm upsilon(int p) const { return forms_.upsilon(p); }
  // Theta_{p, 2k} with p = 1, 2, 3 for I, J, K.
  AltForm theta(int p, int degree) const { return forms_.theta(p, degree); }
  AltForm cayley(int p) const { return forms_.cayley(p); }
  AltForm lambda() const { return forms_.lambda(); }
  Vector basis(int j, int a) const;

 private:
  ConeForms<double> forms_;
  std::array<Matrix, 3> I_;
};

}  // namespace caliber
