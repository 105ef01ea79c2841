#include <cmath>
#include <numbers>
#include <random>

#include "caliber/model/groups.hpp"
#include "caliber/model/link_frame.hpp"
#include "caliber/symforms/conical_catalog.hpp"
#include "doctest.h"

using namespace caliber;

namespace {

Vector random_unit(std::mt19937_64& rng, int N) {
  std::normal_distribution<double> g;
  Vector v(N);
  for (int i = 0; i < N; ++i) v(i) = g(rng);
  return v.normalized();
}

Vector random_vector(std::mt19937_64& rng, int N) {
  std::normal_distribution<double> g;
  Vector v(N);
  for (int i = 0; i < N; ++i) v(i) = g(rng);
  return v;
}

double ev(const AltForm& a, const std::vector<Vector>& vs) { return evaluate(a, vs); }

int eps(int p, int q) {
  if (p == q) return 0;
  return (q - p + 3) % 3 == 1 ? 1 : -1;
}

int third(int p, int q) { return 6 - p - q; }

// Dimension of the intersection of a plane with a coordinate subspace given by its projector.
int intersection_dim(const Plane& P, const Matrix& proj) {
  Eigen::JacobiSVD<Matrix> svd((Matrix::Identity(proj.rows(), proj.cols()) - proj) * P.frame());
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) rank += svd.singularValues()(i) > 1e-9;
  return P.degree() - rank;
}

}  // namespace

TEST_CASE("quaternion relations of the structure matrices") {
  for (int n = 1; n <= 3; ++n) {
    HKModel hk = HKModel::build(n);
    const Matrix Id = Matrix::Identity(hk.dim(), hk.dim());
    for (int p = 1; p <= 3; ++p) {
      CHECK((hk.I(p) * hk.I(p) + Id).norm() < 1e-12);
      CHECK((hk.I(p).transpose() * hk.I(p) - Id).norm() < 1e-12);
    }
    CHECK((hk.I(1) * hk.I(2) - hk.I(3)).norm() < 1e-12);
    CHECK((hk.I(2) * hk.I(3) - hk.I(1)).norm() < 1e-12);
    CHECK((hk.I(3) * hk.I(1) - hk.I(2)).norm() < 1e-12);
  }
}

TEST_CASE("Kahler forms and the hyperkahler relations on random vectors") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 3; ++n) {
    HKModel hk = HKModel::build(n);
    double worst = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      Vector X = random_vector(rng, hk.dim()), Y = random_vector(rng, hk.dim());
      for (int p = 1; p <= 3; ++p) {
        worst = std::max(worst, std::abs(ev(hk.omega(p), {X, Y}) - (hk.I(p) * X).dot(Y)));
        for (int q = 1; q <= 3; ++q) {
          if (q == p) continue;
          const int r = third(p, q);
          worst = std::max(worst, std::abs(ev(hk.omega(p), {Vector(hk.I(q) * X), Y}) -
                                           eps(p, q) * ev(hk.omega(r), {X, Y})));
        }
      }
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("catalog identities on the cone") {
  HKModel hk = HKModel::build(1);
  const AltForm& w1 = hk.omega(1);
  const AltForm& w2 = hk.omega(2);
  const AltForm& w3 = hk.omega(3);
  AltForm theta_I4 = hk.theta(1, 4);
  CHECK(approx_equal(theta_I4, 0.5 * (wedge(w2, w2) - wedge(w3, w3)), 1e-14));
  CHECK(approx_equal(hk.cayley(2), 0.5 * wedge(w1, w1) - theta_I4, 1e-14));
  for (int n = 1; n <= 3; ++n) CHECK(approx_equal(HKModel::build(n).theta(3, 2), HKModel::build(n).omega(1), 0));
  CHECK(approx_equal(hk.upsilon(1).re, 0.5 * (wedge(w2, w2) - wedge(w3, w3)), 1e-14));
  CHECK(ev(w1, {hk.basis(1, 0), Vector(hk.I(1) * hk.basis(1, 0))}) == doctest::Approx(1.0));
}

TEST_CASE("Sp(n+1) fixes the cone catalog") {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 2; ++n) {
    HKModel hk = HKModel::build(n);
    std::vector<AltForm> forms{hk.omega(1), hk.omega(2), hk.omega(3), hk.lambda()};
    for (int p = 1; p <= 3; ++p) {
      forms.push_back(hk.cayley(p));
      for (int k = 1; k <= n + 1; ++k) forms.push_back(hk.theta(p, 2 * k));
    }
    for (int trial = 0; trial < 20; ++trial) {
      Matrix g = random_sp_cone(rng, hk);
      CHECK((g.transpose() * g - Matrix::Identity(hk.dim(), hk.dim())).norm() < 1e-10);
      for (const AltForm& f : forms) CHECK(max_abs_diff(pullback(f, g), f) < 1e-10);
    }
  }
}

TEST_CASE("link frame invariants") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      LinkFrame L(n, trial == 0 ? Vector::Unit(4 * n + 4, 0) : random_unit(rng, 4 * n + 4));
      const Matrix& F = L.frame();
      CHECK((F.transpose() * F - Matrix::Identity(L.dim(), L.dim())).norm() < 1e-12);
      CHECK((F.transpose() * L.point()).norm() < 1e-12);
      for (int p = 1; p <= 3; ++p) {
        for (int q = 1; q <= 3; ++q) {
          Vector Aq = Vector::Unit(L.dim(), q - 1);
          CHECK(ev(L.alpha(p), {Aq}) == doctest::Approx(p == q ? 1.0 : 0.0));
          Vector expect = Vector::Zero(L.dim());
          if (p != q) expect(third(p, q) - 1) = eps(p, q);
          CHECK((L.J(p) * Aq - expect).norm() < 1e-12);
          CHECK(max_abs_coeff(interior(Aq, L.kappa(p))) < 1e-12);
        }
      }
      CHECK(approx_equal(L.Omega(1), wedge(L.alpha(2), L.alpha(3)) + L.kappa(1), 1e-12));
      CHECK(approx_equal(L.gamma(1).re, wedge(L.alpha(2), L.kappa(2)) + wedge(L.alpha(3), L.kappa(3)), 1e-12));
      CHECK(L.horizontal_projector().trace() == doctest::Approx(4 * n));
      CHECK(L.vertical_projector().trace() == doctest::Approx(3));
    }
  }
}

TEST_CASE("link forms at a frame") {
  LinkFrame L(1);
  CHECK(approx_equal(L.theta(1, 1), L.alpha(2), 1e-14));
  CHECK(approx_equal(L.theta(1, 3), wedge(L.alpha(2), L.Omega(2)) - wedge(L.alpha(3), L.Omega(3)), 1e-14));
  AltForm expect_phi = L.alpha123() - wedge(L.alpha(1), L.kappa(1)) + wedge(L.alpha(2), L.kappa(2)) +
                       wedge(L.alpha(3), L.kappa(3));
  CHECK(approx_equal(L.phi(1), expect_phi, 1e-14));
  CHECK(max_abs_coeff(interior(Vector(Vector::Unit(L.dim(), 0)), L.gamma(1).re)) < 1e-14);
}

TEST_CASE("frame-coordinate catalog does not depend on the base point") {
  std::mt19937_64 rng(14);
  for (int n = 1; n <= 2; ++n) {
    LinkFrame ref(n);
    Vector x = random_unit(rng, 4 * n + 4);
    LinkFrame a(n, x);
    LinkFrame b(n, Vector(a.cone().I(1) * x));
    for (const LinkFrame* L : {&a, &b}) {
      for (int p = 1; p <= 3; ++p) {
        CHECK(max_abs_diff(L->alpha(p), ref.alpha(p)) < 1e-12);
        CHECK(max_abs_diff(L->kappa(p), ref.kappa(p)) < 1e-12);
        CHECK(max_abs_diff(L->psi(p), ref.psi(p)) < 1e-12);
        CHECK(max_abs_diff(L->phi(p), ref.phi(p)) < 1e-12);
        CHECK(max_abs_diff(L->theta(p, 3), ref.theta(p, 3)) < 1e-12);
      }
    }
  }
}

TEST_CASE("numeric link forms agree with the exact conical extensions") {
  std::mt19937_64 rng(15);
  for (int n = 1; n <= 2; ++n) {
    ConicalCatalog cat(n);
    for (int trial = 0; trial < 3; ++trial) {
      Vector x = random_unit(rng, cat.dim());
      LinkFrame L(n, x);
      auto restrict_ = [&](const RationalForm& f) { return pullback(evaluate_at(f, x), L.frame()); };
      auto restrict_c = [&](const CRationalForm& f) { return pullback(evaluate_at(f, x), L.frame()); };
      for (int p = 1; p <= 3; ++p) {
        CHECK(max_abs_diff(restrict_(cat.alpha(p)), L.alpha(p)) < 1e-10);
        CHECK(max_abs_diff(restrict_(cat.Omega(p)), L.Omega(p)) < 1e-10);
        CHECK(max_abs_diff(restrict_(cat.kappa(p)), L.kappa(p)) < 1e-10);
        CHECK(max_abs_diff(restrict_(cat.phi(p)), L.phi(p)) < 1e-10);
        CHECK(max_abs_diff(restrict_(cat.xi(p)), L.xi(p)) < 1e-10);
        CHECK(max_abs_diff(restrict_(cat.omega_tilde(p)), L.omega_tilde(p)) < 1e-10);
        CHECK(max_abs_diff(restrict_c(cat.gamma(p)), L.gamma(p)) < 1e-10);
        CHECK(max_abs_diff(restrict_c(cat.psi(p)), L.psi(p)) < 1e-10);
        CHECK(max_abs_diff(restrict_(cat.link_theta(p, 4)), L.theta(p, 3)) < 1e-10);
      }
    }
  }
}

TEST_CASE("squashed associative forms") {
  LinkFrame L(1);
  auto [m1, p1] = make_squashed_associative(L, 1.0);
  AltForm sum = wedge(L.alpha(1), L.kappa(1)) + wedge(L.alpha(2), L.kappa(2)) + wedge(L.alpha(3), L.kappa(3));
  CHECK(approx_equal(p1, L.alpha123() - sum, 1e-14));
  CHECK(approx_equal(m1, L.phi(1), 1e-14));
  auto [m0, p0] = make_squashed_associative(L, 1e-8);
  CHECK(max_abs_diff(m0, L.alpha123()) < 1e-15);
  CHECK(max_abs_diff(p0, L.alpha123()) < 1e-15);
  CHECK_THROWS_AS(make_squashed_associative(L, 0.0), InvalidArgument);
  CHECK_THROWS_AS(make_squashed_associative(LinkFrame(2), 1.0), InvalidArgument);
}

TEST_CASE("twistor model relations") {
  for (int n = 1; n <= 3; ++n) {
    TwistorModel T = TwistorModel::build(n);
    CHECK(approx_equal(T.omega_KE(), T.omega_H() + T.omega_V(), 0));
    CHECK(approx_equal(T.omega_NK(), 2.0 * T.omega_H() - T.omega_V(), 0));
    CHECK(approx_equal(T.omega_KE(), T.beta(1) + AltForm::basis(T.dim(), {T.f2(), T.f3()}), 0));
    CHECK(approx_equal(interior(T.f(2), T.gamma0().re), T.beta(2), 1e-15));
    CHECK(ev(T.omega_NK(), {T.e(1, 0), T.e(1, 1)}) == doctest::Approx(2.0));
    CHECK(ev(T.omega_NK(), {T.f(2), T.f(3)}) == doctest::Approx(-1.0));
    // Contracting with f2 + i f3 yields 2 (beta2 + i beta3).
    CAltForm c = interior(T.f(2), T.gamma0()) + interior(T.f(3), T.gamma0()).times_i();
    CHECK(max_abs_diff(c, 2.0 * CAltForm(T.beta(2), T.beta(3))) < 1e-15);
    const Matrix Id = Matrix::Identity(T.dim(), T.dim());
    CHECK((T.J_plus() * T.J_plus() + Id).norm() < 1e-14);
    CHECK((T.J_minus() * T.J_minus() + Id).norm() < 1e-14);
    // J_-: type (3,0); J_+: type (2,1).
    CHECK(max_abs_diff(j_derivation(T.gamma0(), T.J_minus()), scale(cplx(0, 3), T.gamma0())) < 1e-13);
    CHECK(max_abs_diff(j_derivation(T.gamma0(), T.J_plus()), scale(cplx(0, 1), T.gamma0())) < 1e-13);
  }
}

TEST_CASE("SU(3) normalization for n = 1") {
  TwistorModel T = TwistorModel::build(1);
  CAltForm gg = wedge(T.gamma0(), T.gamma0().conj());
  CAltForm lhs = scale(cplx(0, -1.0 / 8.0), gg);
  CHECK(max_abs_diff(lhs, CAltForm::real(AltForm::basis(6, {0, 1, 2, 3, 4, 5}))) < 1e-14);
}

TEST_CASE("stabilizer of gamma0") {
  std::mt19937_64 rng(16);
  for (int n = 1; n <= 2; ++n) {
    TwistorModel T = TwistorModel::build(n);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
      Matrix g = random_sp_u1(rng, T);
      worst = std::max(worst, max_abs_diff(pullback(T.gamma0(), g), T.gamma0()));
      worst = std::max(worst, max_abs_diff(pullback(T.omega_KE(), g), T.omega_KE()));
      worst = std::max(worst, max_abs_diff(pullback(T.omega_NK(), g), T.omega_NK()));
    }
    CHECK(worst < 1e-10);
    int moved = 0;
    for (int trial = 0; trial < 20; ++trial) {
      Matrix g = random_u2n_u1(rng, T);
      CHECK(max_abs_diff(pullback(T.omega_KE(), g), T.omega_KE()) < 1e-10);
      moved += max_abs_diff(pullback(T.gamma0(), g), T.gamma0()) > 1e-3;
    }
    CHECK(moved == 20);
  }
}

TEST_CASE("V_theta and W_theta") {
  TwistorModel T = TwistorModel::build(2);
  const double pi = std::numbers::pi;
  for (double th : {0.0, 0.1, 0.2, pi / 8, pi / 4, 1.0, 2.5, 4.0}) {
    Matrix V = v_theta_frame(T, th);
    CHECK(ev(T.omega_KE(), {Vector(V.col(0)), Vector(V.col(1))}) ==
          doctest::Approx(2 * (std::cos(th) * std::cos(th) - std::sin(th) * std::sin(th))));
    CHECK(evaluate(T.gamma0().re, make_W_theta(T, th)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  Matrix V0 = v_theta_frame(T, 0.0);
  CHECK(ev(T.gamma0().re, {T.e(1, 0), Vector(V0.col(0) / std::sqrt(2.0)), Vector(V0.col(1) / std::sqrt(2.0))}) ==
        doctest::Approx(1.0));
  CHECK(intersection_dim(make_W_theta(T, pi / 4), T.horizontal_projector()) == 2);
  CHECK(intersection_dim(make_W_theta(T, 0.0), T.horizontal_projector()) == 1);
  CHECK(intersection_dim(make_W_theta(T, 0.3), T.horizontal_projector()) == 1);
}

TEST_CASE("linear model of the twistor projection") {
  for (int n = 1; n <= 2; ++n) {
    TwistorModel T = TwistorModel::build(n);
    LinkFrame L(n);
    Matrix P = T.link_projection();
    CHECK(max_abs_diff(pullback(T.gamma0(), P), L.gamma(1)) < 1e-14);
    CHECK(max_abs_diff(pullback(T.omega_H(), P), L.kappa(1)) < 1e-14);
    CHECK(max_abs_diff(pullback(T.omega_NK(), P), L.omega_tilde(1)) < 1e-14);
    CHECK(max_abs_diff(pullback(T.xi(), P), L.xi(1)) < 1e-14);
    CHECK((P * P.transpose() - Matrix::Identity(T.dim(), T.dim())).norm() < 1e-15);
  }
}
