#include "caliber/calib/semicalibration.hpp"

#include <cmath>

namespace caliber {

bool is_calibrated(const AltForm& f, const Plane& P, double tol) {
  if (f.degree() != P.degree() || f.dim() != P.dim()) throw DimensionMismatch("form and plane shapes differ");
  return std::abs(evaluate(f, P) - 1.0) <= tol;
}

Matrix orthogonal_complement(const Vector& e) {
  const int N = static_cast<int>(e.size());
  Matrix M(N, N);
  M.col(0) = e;
  // Remaining columns: coordinate vectors in order, skipping the one most aligned with e.
  int skip = 0;
  e.cwiseAbs().maxCoeff(&skip);
  for (int i = 0, c = 1; i < N; ++i)
    if (i != skip) M.col(c++) = Vector::Unit(N, i);
  return orthonormalize(M).rightCols(N - 1);
}

LineReduction reduce_along_line(const AltForm& f, const Vector& e, const Matrix* complement, bool lines_calibrated,
                                const ComassParams& params) {
  if (e.size() != f.dim()) throw DimensionMismatch("line direction has wrong dimension");
  if (std::abs(e.norm() - 1.0) > 1e-12) throw InvalidArgument("line direction must be a unit vector");
  LineReduction out;
  out.complement = complement ? *complement : orthogonal_complement(e);
  if (out.complement.rows() != f.dim() || out.complement.cols() != f.dim() - 1)
    throw DimensionMismatch("complement basis has wrong shape");
  if ((out.complement.transpose() * e).norm() > 1e-10 ||
      (out.complement.transpose() * out.complement - Matrix::Identity(f.dim() - 1, f.dim() - 1)).norm() > 1e-10)
    throw InvalidArgument("complement basis must be orthonormal and orthogonal to the line");
  out.alpha = pullback(interior(e, f), out.complement);
  out.beta = pullback(f, out.complement);
  if (lines_calibrated && out.alpha.degree() > 0)
    out.alpha_comass = comass_search(out.alpha, out.alpha.degree(), params).value;
  return out;
}

Transported transport_by_scaling(const AltForm& f, double t, int m, const std::vector<bool>& horizontal) {
  if (static_cast<int>(horizontal.size()) != f.dim()) throw DimensionMismatch("split mask has wrong length");
  if (!(t > 0)) throw InvalidArgument("scaling factor must be positive");
  BladeMask H = 0;
  for (int i = 0; i < f.dim(); ++i)
    if (horizontal[i]) H |= BladeMask{1} << i;
  for (const auto& [mask, c] : f.terms())
    if (blade::degree(mask & H) != m) throw PreconditionFailed("form does not lie in the declared split");
  Transported out;
  out.form = std::pow(t, m) * f;
  out.metric = Matrix::Identity(f.dim(), f.dim());
  for (int i = 0; i < f.dim(); ++i)
    if (horizontal[i]) out.metric(i, i) = t * t;
  return out;
}

Transported transport_by_submersion(const AltForm& f, const Matrix& p) {
  if (p.rows() != f.dim()) throw DimensionMismatch("submersion target dimension differs from the form");
  if (p.rows() > p.cols()) throw InvalidArgument("submersion have at least as many columns as rows");
  if ((p * p.transpose() - Matrix::Identity(p.rows(), p.rows())).norm() > 1e-10)
    throw PreconditionFailed("map is not a Riemannian submersion");
  return {pullback(f, p), Matrix::Identity(p.cols(), p.cols())};
}

bool splitting_support(const AltForm& f, const Vector& e, const std::vector<Plane>& maximizers, double tol) {
  if (max_abs_coeff(interior(e, f)) > 1e-12) throw PreconditionFailed("the line direction does not annihilate the form");
  for (const Plane& P : maximizers)
    if ((P.frame().transpose() * e).norm() > tol) return false;
  return true;
}

std::optional<int> pure_type_degree(const AltForm& f, const Matrix& J, double tol) {
  const int k = f.degree();
  AltForm dd = j_derivation(j_derivation(f, J), J);
  if (max_abs_diff(dd, -double(k * k) * f) <= tol * std::max(1.0, max_abs_coeff(f))) return k;
  return std::nullopt;
}

double max_restriction(const AltForm& omega, const Plane& P) {
  double worst = 0;
  for (int i = 0; i < P.degree(); ++i)
    for (int j = i + 1; j < P.degree(); ++j)
      worst = std::max(worst, std::abs(evaluate(omega, std::vector<Vector>{P.vector(i), P.vector(j)})));
  return worst;
}

IsotropyCheck isotropy_of_maximizers(const AltForm& f, const Matrix& J, const AltForm& omega,
                                     const std::vector<Plane>& maximizers, double tol) {
  if (pure_type_degree(f, J) != f.degree()) throw PreconditionFailed("form is not of type (k,0)+(0,k)");
  IsotropyCheck out;
  for (const Plane& P : maximizers) out.worst = std::max(out.worst, max_restriction(omega, P));
  out.holds = out.worst <= tol;
  return out;
}

EnvelopeReport explore_envelope(const std::vector<Plane>& maximizers, const Matrix& I1, const Matrix& I2,
                                const Matrix& I3) {
  EnvelopeReport out;
  for (const Plane& P : maximizers) {
    out.plane_degree = P.degree();
    Matrix span(P.dim(), 4 * P.degree());
    span << P.frame(), I1 * P.frame(), I2 * P.frame(), I3 * P.frame();
    Eigen::JacobiSVD<Matrix> svd(span);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) rank += svd.singularValues()(i) > 1e-6;
    out.envelope_dims.push_back(rank);
  }
  return out;
}

}  // namespace caliber
