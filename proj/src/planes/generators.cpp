#include "caliber/planes/generators.hpp"

#include <cmath>

namespace caliber {

Vector gaussian_vector(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = g(rng);
  return v;
}

Plane random_plane(std::mt19937_64& rng, int dim, int k) {
  Matrix M(dim, k);
  for (int j = 0; j < k; ++j) M.col(j) = gaussian_vector(rng, dim);
  return Plane::from_frame(M);
}

Vector random_unit_orthogonal_to(std::mt19937_64& rng, const Matrix& B, int dim) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vector v = gaussian_vector(rng, dim);
    if (B.cols() > 0) {
      Eigen::JacobiSVD<Matrix> svd(B, Eigen::ComputeThinU);
      const auto& s = svd.singularValues();
      for (int i = 0; i < s.size(); ++i)
        if (s(i) > 1e-10 * std::max(1.0, s(0))) v -= svd.matrixU().col(i) * svd.matrixU().col(i).dot(v);
    }
    const double nv = v.norm();
    if (nv > 1e-6) return v / nv;
  }
  throw InvalidArgument("no room left for a vector orthogonal to the given span");
}

Plane random_complex_plane(std::mt19937_64& rng, const Matrix& J, int m, const std::vector<Matrix>& avoid_images,
                           const Matrix& avoid) {
  const int N = static_cast<int>(J.rows());
  std::vector<Vector> cols;
  for (int i = 0; i < avoid.cols(); ++i) cols.push_back(avoid.col(i));
  Matrix frame(N, 2 * m);
  for (int i = 0; i < m; ++i) {
    Matrix B(N, static_cast<int>(cols.size()));
    for (int c = 0; c < B.cols(); ++c) B.col(c) = cols[c];
    const Vector v = random_unit_orthogonal_to(rng, B, N);
    const Vector Jv = J * v;
    frame.col(2 * i) = v;
    frame.col(2 * i + 1) = Jv;
    cols.push_back(v);
    cols.push_back(Jv);
    for (const Matrix& A : avoid_images) {
      cols.push_back(A * v);
      cols.push_back(A * Jv);
    }
  }
  return Plane::from_frame(frame);
}

Plane random_cone_complex(std::mt19937_64& rng, const HKModel& hk, int p, int m) {
  return random_complex_plane(rng, hk.I(p), m);
}

Plane random_cone_complex_isotropic(std::mt19937_64& rng, const HKModel& hk, int p, int m) {
  const int q = p % 3 + 1;
  return random_complex_plane(rng, hk.I(p), m, {hk.I(q), hk.I(q) * hk.I(p)});
}

namespace {

Plane prepend(const Vector& a, const Plane& P) {
  Matrix M(P.dim(), P.degree() + 1);
  M.col(0) = a;
  M.rightCols(P.degree()) = P.frame();
  return Plane::from_frame(M);
}

}  // namespace

Plane random_link_cr(std::mt19937_64& rng, const LinkFrame& L, int p, int m) {
  const Vector a = Vector::Unit(L.dim(), p - 1);
  Matrix avoid = a;
  return prepend(a, random_complex_plane(rng, L.J(p), m, {}, avoid));
}

Plane random_link_cr_isotropic(std::mt19937_64& rng, const LinkFrame& L, int p, int m) {
  const int q = p % 3 + 1;
  const Matrix avoid = Matrix::Identity(L.dim(), 3);
  return prepend(Vector::Unit(L.dim(), p - 1),
                 random_complex_plane(rng, L.J(p), m, {L.J(q), L.J(q) * L.J(p)}, avoid));
}

Plane random_hv_plane(std::mt19937_64& rng, const TwistorModel& T, int mh, int mv, bool isotropic_horizontal) {
  const int N = T.dim();
  Matrix frame(N, mh + mv);
  std::vector<Vector> cols = {T.f(2), T.f(3)};
  for (int i = 0; i < mh; ++i) {
    Matrix B(N, static_cast<int>(cols.size()));
    for (int c = 0; c < B.cols(); ++c) B.col(c) = cols[c];
    const Vector v = random_unit_orthogonal_to(rng, B, N);
    frame.col(i) = v;
    cols.push_back(v);
    if (isotropic_horizontal) cols.push_back(T.J_plus() * v);
  }
  std::normal_distribution<double> g;
  const double phase = std::atan2(g(rng), g(rng));
  if (mv >= 1) frame.col(mh) = std::cos(phase) * T.f(2) + std::sin(phase) * T.f(3);
  if (mv == 2) frame.col(mh + 1) = -std::sin(phase) * T.f(2) + std::cos(phase) * T.f(3);
  return reframe(rng, Plane::from_frame(frame));
}

Plane reframe(std::mt19937_64& rng, const Plane& P) {
  const int k = P.degree();
  Matrix G(k, k);
  for (int j = 0; j < k; ++j) G.col(j) = gaussian_vector(rng, k);
  Matrix Q = orthonormalize(G);
  if (Q.determinant() < 0) Q.col(0) = -Q.col(0);
  return Plane::from_frame(P.frame() * Q);
}

IsotropicSearch random_isotropic_plane(std::mt19937_64& rng, const std::vector<AltForm>& forms, int k, double tol,
                                       int max_attempts) {
  if (forms.empty()) throw InvalidArgument("isotropic search needs at least one 2-form");
  const int N = forms.front().dim();
  std::vector<Matrix> S;
  for (const auto& w : forms) {
    if (w.degree() != 2 || w.dim() != N) throw InvalidArgument("isotropic search takes 2-forms of one dimension");
    S.push_back(skew_matrix(w));
  }
  const int pairs = k * (k - 1) / 2;
  const int rows = pairs * static_cast<int>(S.size());
  // Stacked strictly upper entries of U^T S U.
  auto residuals = [&](const Matrix& U) {
    Vector r(rows);
    int at = 0;
    for (const Matrix& s : S) {
      const Matrix M = U.transpose() * s * U;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) r(at++) = M(i, j);
    }
    return r;
  };
  IsotropicSearch out;
  for (out.attempts = 1; out.attempts <= max_attempts; ++out.attempts) {
    Matrix U = random_plane(rng, N, k).frame();
    Vector r = residuals(U);
    // Gauss-Newton on perturbations U + C X, C a basis of the complement; the
    // pseudo-inverse handles the redundancy of the equations.
    for (int it = 0; it < 100 && r.cwiseAbs().maxCoeff() > tol; ++it) {
      Eigen::JacobiSVD<Matrix> full(U, Eigen::ComputeFullU);
      const Matrix C = full.matrixU().rightCols(N - k);
      Matrix Jm(rows, (N - k) * k);
      for (int a = 0; a < N - k; ++a)
        for (int b = 0; b < k; ++b) {
          Matrix dU = Matrix::Zero(N, k);
          dU.col(b) = C.col(a);
          int at = 0;
          for (const Matrix& s : S) {
            const Matrix dM = dU.transpose() * s * U + U.transpose() * s * dU;
            for (int i = 0; i < k; ++i)
              for (int j = i + 1; j < k; ++j) Jm(at++, a * k + b) = dM(i, j);
          }
        }
      Eigen::CompleteOrthogonalDecomposition<Matrix> cod(Jm);
      cod.setThreshold(1e-10);
      const Vector step = cod.solve(-r);
      Matrix X(N - k, k);
      for (int a = 0; a < N - k; ++a)
        for (int b = 0; b < k; ++b) X(a, b) = step(a * k + b);
      double t = 1;
      for (int h = 0; h < 30; ++h, t *= 0.5) {
        const Matrix trial = orthonormalize(U + t * C * X);
        const Vector rt = residuals(trial);
        if (rt.norm() < r.norm()) {
          U = trial;
          r = rt;
          break;
        }
      }
      if (t < 1e-8) break;
    }
    out.residual = rows ? r.cwiseAbs().maxCoeff() : 0;
    if (out.residual <= tol) {
      out.plane = Plane::from_frame(U);
      return out;
    }
  }
  throw PreconditionFailed("isotropic search did not converge");
}

}  // namespace caliber
