#include "caliber/model/groups.hpp"

#include <cmath>
#include <numbers>

namespace caliber {

namespace {

Matrix gaussian_skew(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Matrix X(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) X(i, j) = g(rng);
  return 0.5 * (X - X.transpose());
}

Matrix rotation(const Matrix& J, double angle) {
  // exp(angle J) for J^2 = -1 on its support.
  const Matrix P = -J * J;
  return Matrix::Identity(J.rows(), J.cols()) - P + std::cos(angle) * P + std::sin(angle) * J;
}

Matrix horizontal_block(const Matrix& M, int h) { return M.topLeftCorner(h, h); }

}  // namespace

Matrix random_commutant_orthogonal(std::mt19937_64& rng, const std::vector<Matrix>& generators, int dim) {
  Matrix X = gaussian_skew(rng, dim);
  // Averaging over {1, J} or the quaternion group {1, J1, J2, J3} projects onto the commutant.
  Matrix acc = X;
  for (const Matrix& J : generators) acc -= J * X * J;
  X = acc / static_cast<double>(generators.size() + 1);
  const Matrix I = Matrix::Identity(dim, dim);
  return (I - X).partialPivLu().solve(I + X);
}

Matrix random_sp_cone(std::mt19937_64& rng, const HKModel& hk) {
  return random_commutant_orthogonal(rng, {hk.I(1), hk.I(2), hk.I(3)}, hk.dim());
}

Matrix sp_u1_element(const TwistorModel& T, const Matrix& A, double phi) {
  const int h = 4 * T.n();
  Matrix g = Matrix::Zero(T.dim(), T.dim());
  g.topLeftCorner(h, h) = A * rotation(horizontal_block(T.J(1), h), -phi);
  g.bottomRightCorner(2, 2) = rotation(T.J_vertical(), -2 * phi).bottomRightCorner(2, 2);
  return g;
}

Matrix random_sp_n(std::mt19937_64& rng, const TwistorModel& T) {
  const int h = 4 * T.n();
  return random_commutant_orthogonal(
      rng, {horizontal_block(T.J(1), h), horizontal_block(T.J(2), h), horizontal_block(T.J(3), h)}, h);
}

Matrix random_sp_u1(std::mt19937_64& rng, const TwistorModel& T) {
  Matrix A = random_sp_n(rng, T);
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  return sp_u1_element(T, A, u(rng));
}

Matrix random_u2n_u1(std::mt19937_64& rng, const TwistorModel& T) {
  const int h = 4 * T.n();
  Matrix B = random_commutant_orthogonal(rng, {horizontal_block(T.J(1), h)}, h);
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  Matrix g = Matrix::Zero(T.dim(), T.dim());
  g.topLeftCorner(h, h) = B;
  g.bottomRightCorner(2, 2) = rotation(T.J_vertical(), u(rng)).bottomRightCorner(2, 2);
  return g;
}

}  // namespace caliber
