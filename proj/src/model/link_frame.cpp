#include "caliber/model/link_frame.hpp"

#include <cmath>

namespace caliber {

namespace {

int next(int p) { return p % 3 + 1; }
int after_next(int p) { return (p + 1) % 3 + 1; }

double inv_factorial(int k) { return 1.0 / factorial_as<double>(k); }

}  // namespace

LinkFrame::LinkFrame(int n) : LinkFrame(n, Vector::Unit(4 * n + 4, 0)) {}

LinkFrame::LinkFrame(int n, const Vector& x) : n_(n), hk_(HKModel::build(n)), x_(x) {
  const int N = hk_.dim();
  if (x.size() != N) throw DimensionMismatch("link base point has wrong dimension");
  if (std::abs(x.norm() - 1.0) > 1e-12) throw InvalidArgument("link base point must be a unit vector");
  F_ = Matrix::Zero(N, N - 1);
  Matrix span(N, N);
  span.col(0) = x;
  for (int p = 1; p <= 3; ++p) {
    F_.col(p - 1) = hk_.I(p) * x;
    span.col(p) = F_.col(p - 1);
  }
  int filled = 4;
  // Complete by quaternionic lines: pick the coordinate vector furthest from the current span.
  while (filled < N) {
    const auto S = span.leftCols(filled);
    Vector best;
    double best_norm = -1;
    for (int i = 0; i < N; ++i) {
      Vector e = Vector::Unit(N, i);
      Vector res = e - S * (S.transpose() * e);
      const double nr = res.norm();
      if (nr > best_norm + 1e-12) {
        best_norm = nr;
        best = res;
      }
    }
    Vector h = best / best_norm;
    h -= S * (S.transpose() * h);
    h.normalize();
    const Vector line[4] = {h, hk_.I(1) * h, hk_.I(2) * h, hk_.I(3) * h};
    for (const Vector& v : line) {
      F_.col(filled - 1) = v;
      span.col(filled++) = v;
    }
  }
  for (int p = 1; p <= 3; ++p) {
    J_[p - 1] = F_.transpose() * hk_.I(p) * F_;
    alpha_[p - 1] = pullback(interior(x_, hk_.omega(p)), F_);
    Omega_[p - 1] = pullback(hk_.omega(p), F_);
  }
  for (int p = 1; p <= 3; ++p)
    kappa_[p - 1] = Omega_[p - 1] - wedge(alpha_[next(p) - 1], alpha_[after_next(p) - 1]);
}

Matrix LinkFrame::vertical_projector() const {
  Matrix P = Matrix::Zero(dim(), dim());
  P.topLeftCorner(3, 3).setIdentity();
  return P;
}

Matrix LinkFrame::horizontal_projector() const { return Matrix::Identity(dim(), dim()) - vertical_projector(); }

AltForm LinkFrame::alpha123() const { return wedge(wedge(alpha(1), alpha(2)), alpha(3)); }

CAltForm LinkFrame::sigma_power(int p, int m) const {
  CAltForm s(Omega(next(p)), Omega(after_next(p)));
  CAltForm acc = CAltForm::real(constant(dim(), 1.0));
  for (int i = 0; i < m; ++i) acc = wedge(acc, s);
  return inv_factorial(m) * acc;
}

CAltForm LinkFrame::psi(int p) const {
  return wedge(CAltForm(alpha(next(p)), alpha(after_next(p))), sigma_power(p, n_));
}

CAltForm LinkFrame::gamma(int p) const {
  return wedge(CAltForm(alpha(next(p)), -alpha(after_next(p))), CAltForm(kappa(next(p)), kappa(after_next(p))));
}

AltForm LinkFrame::xi(int p) const {
  const AltForm& a = kappa(next(p));
  const AltForm& b = kappa(after_next(p));
  return wedge(a, a) + wedge(b, b);
}

AltForm LinkFrame::phi(int p) const {
  AltForm acc = alpha123();
  for (int q = 1; q <= 3; ++q) {
    AltForm t = wedge(alpha(q), kappa(q));
    acc = q == p ? acc - t : acc + t;
  }
  return acc;
}

AltForm LinkFrame::omega_tilde(int p) const {
  return 2.0 * kappa(p) - wedge(alpha(next(p)), alpha(after_next(p)));
}

AltForm LinkFrame::cr_form(int p, int k) const {
  AltForm acc = constant(dim(), 1.0);
  for (int i = 0; i < k; ++i) acc = wedge(acc, Omega(p));
  return inv_factorial(k) * wedge(alpha(p), acc);
}

AltForm LinkFrame::theta(int p, int degree) const {
  if (degree % 2 == 0 || degree < 1) throw InvalidArgument("link theta forms have odd degree");
  return link_part(hk_.theta(p, degree + 1));
}

AltForm LinkFrame::link_part(const AltForm& cone_form) const { return pullback(interior(x_, cone_form), F_); }

CAltForm LinkFrame::link_part(const CAltForm& cone_form) const { return pullback(interior(x_, cone_form), F_); }

std::pair<AltForm, AltForm> make_squashed_associative(const LinkFrame& L, double t) {
  if (L.n() != 1) throw InvalidArgument("squashed associative forms are defined for n = 1");
  if (!(t > 0)) throw InvalidArgument("squashing parameter must be positive");
  const double t2 = t * t;
  AltForm a1 = wedge(L.alpha(1), L.kappa(1));
  AltForm a2 = wedge(L.alpha(2), L.kappa(2));
  AltForm a3 = wedge(L.alpha(3), L.kappa(3));
  AltForm minus = L.alpha123() + t2 * (a2 + a3 - a1);
  AltForm plus = L.alpha123() - t2 * (a1 + a2 + a3);
  return {minus, plus};
}

}  // namespace caliber
