#include "caliber/model/hyperkahler.hpp"

namespace caliber {

Matrix structure_matrix(const AltForm& two_form) { return skew_matrix(two_form).transpose(); }

AltForm kahler_form(const Matrix& J) { return from_skew_matrix(J.transpose()); }

HKModel HKModel::build(int n) {
  if (n < 1 || n > 3) throw InvalidArgument("hyperkahler cone supports n = 1, 2, 3");
  HKModel m;
  m.forms_ = ConeForms<double>::build(n);
  for (int p = 1; p <= 3; ++p) m.I_[p - 1] = structure_matrix(m.forms_.omega[p - 1]);
  return m;
}

Vector HKModel::basis(int j, int a) const {
  if (j < 1 || j > n() + 1 || a < 0 || a > 3) throw InvalidArgument("cone basis index out of range");
  return Vector::Unit(dim(), quat_index(j, a));
}

}  // namespace caliber
