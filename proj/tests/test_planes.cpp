#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "caliber/calib/semicalibration.hpp"
#include "caliber/model/groups.hpp"
#include "caliber/planes/classify.hpp"
#include "caliber/planes/generators.hpp"
#include "caliber/planes/normal_form.hpp"
#include "caliber/planes/scans.hpp"
#include "doctest.h"

using namespace caliber;

namespace {

double projector_gap(const Matrix& A, const Matrix& B) {
  const Matrix QA = orthonormalize(A), QB = orthonormalize(B);
  return (QA * QA.transpose() - QB * QB.transpose()).cwiseAbs().maxCoeff();
}

void require_scan(const std::string& id, int n, int samples) {
  ScanResult r = run_proposition_scan(id, n, samples, 11);
  INFO(r.to_json().dump());
  CHECK(r.premise_count > 0);
  CHECK(r.counterexamples == 0);
}

}  // namespace

TEST_CASE("quaternionic line is complex for every structure and Cayley") {
  HKModel hk = HKModel::build(1);
  const Vector e = hk.basis(1, 0);
  Plane P = Plane::from_vectors({e, hk.I(1) * e, hk.I(2) * e, hk.I(3) * e});
  auto r = classify_plane(P, hk);
  CHECK(r.flag("complex_I1"));
  CHECK(r.flag("complex_I2"));
  CHECK(r.flag("complex_I3"));
  CHECK(r.value("Phi2") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.flag("cayley_Phi2"));
  // The same line in any orientation is still complex.
  Plane Q = Plane::from_vectors({hk.I(1) * e, e, hk.I(2) * e, hk.I(3) * e});
  CHECK(classify_plane(Q, hk).flag("complex_I1"));
}

TEST_CASE("mixed quaternionic plane is I2-complex isotropic") {
  HKModel hk = HKModel::build(1);
  const Vector e1 = hk.basis(1, 0), e2 = hk.basis(2, 0);
  Plane P = Plane::from_vectors({e1, e2, hk.I(2) * e1, hk.I(2) * e2});
  auto r = classify_plane(P, hk);
  CHECK(r.flag("complex_I2"));
  CHECK_FALSE(r.flag("complex_I1"));
  CHECK_FALSE(r.flag("complex_I3"));
  CHECK(r.flag("isotropic_omega1"));
  CHECK(r.flag("isotropic_omega3"));
  CHECK_FALSE(r.flag("isotropic_omega2"));
  CHECK(r.flag("complex_isotropic_I2"));
  CHECK(r.flag("complex_lagrangian_I2"));
  // Direct evaluation oracle.
  CHECK(std::abs(evaluate(hk.omega(1), std::vector<Vector>{e1, hk.I(2) * e2})) < 1e-15);
  CHECK(std::abs(evaluate(hk.omega(3), std::vector<Vector>{e1, e2})) < 1e-15);
}

TEST_CASE("CR plane at a link frame is associative") {
  for (int n = 1; n <= 2; ++n) {
    LinkFrame L(n);
    const Vector a1 = Vector::Unit(L.dim(), 0);
    Vector v = Vector::Zero(L.dim());
    v(3) = 0.6;
    v(L.dim() - 1) = 0.8;
    Plane P = Plane::from_vectors({a1, v, L.J(1) * v});
    auto r = classify_plane(P, L);
    CHECK(r.flag("cr_I1"));
    CHECK_FALSE(r.flag("cr_I2"));
    CHECK(r.value("phi2") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.flag("associative_phi2"));
    CHECK(r.value("cr_volume1") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.flag("cr_isotropic_I1"));
    CHECK_FALSE(r.flag("p_horizontal1"));
  }
}

TEST_CASE("classification rejects planes from another space") {
  HKModel hk = HKModel::build(1);
  LinkFrame L(1);
  TwistorModel T = TwistorModel::build(1);
  std::mt19937_64 rng(1);
  Plane P = random_plane(rng, 7, 3);
  CHECK_THROWS_AS(classify_plane(P, hk), DimensionMismatch);
  CHECK_THROWS_AS(classify_plane(P, T), DimensionMismatch);
  CHECK_NOTHROW(classify_plane(P, L));
  CHECK_THROWS_AS(ConeClassifier(hk, 3).classify(random_plane(rng, 8, 4), 1e-8), DimensionMismatch);
}

TEST_CASE("report flags carry witness and tolerance") {
  HKModel hk = HKModel::build(1);
  std::mt19937_64 rng(2);
  auto r = classify_plane(random_plane(rng, 8, 4), hk, 1e-7, "sample");
  auto j = r.to_json();
  CHECK(j["plane_id"] == "sample");
  CHECK(j["space"] == "cone");
  CHECK(j["flags"].size() == r.flags().size());
  for (auto& [name, f] : j["flags"].items()) {
    CHECK(f.contains("witness"));
    CHECK(f["tol"].get<double>() == 1e-7);
  }
  // Generic planes sit in no class, and carry no phase.
  CHECK_FALSE(r.flag("complex_I1"));
  CHECK_FALSE(r.phase("upsilon1").phase.has_value());
}

TEST_CASE("phases are extracted only on calibrated planes") {
  HKModel hk = HKModel::build(1);
  const Vector e1 = hk.basis(1, 0), e2 = hk.basis(2, 0);
  // A special Lagrangian plane of a known phase: rotate one vector of the real plane by I1.
  const double t = 0.3;
  Plane P = Plane::from_vectors({e1, hk.basis(1, 2), e2, std::cos(t) * hk.basis(2, 2) + std::sin(t) * hk.I(1) * hk.basis(2, 2)});
  auto r = classify_plane(P, hk);
  const auto& ph = r.phase("upsilon1");
  const cplx u = evaluate(hk.upsilon(1), P);
  CHECK(ph.re == doctest::Approx(u.real()));
  if (std::abs(u) >= 1 - 1e-8) {
    REQUIRE(ph.phase.has_value());
    CHECK(*ph.phase == doctest::Approx(std::arg(u)).epsilon(1e-12));
  } else {
    CHECK_FALSE(ph.phase.has_value());
  }
}

TEST_CASE("twistor classification of the normal form family") {
  TwistorModel T = TwistorModel::build(2);
  auto r0 = classify_plane(make_W_theta(T, 0), T);
  CHECK(r0.flag("calibrated_re_gamma0"));
  CHECK_FALSE(r0.flag("hv_compatible"));
  CHECK(r0.value("dim_T_cap_H") == 1);
  auto r1 = classify_plane(make_W_theta(T, std::numbers::pi / 4), T);
  CHECK(r1.flag("hv_compatible"));
  CHECK(r1.value("dim_T_cap_H") == 2);
  CHECK(r1.value("dim_T_cap_V") == 1);
  CHECK(r1.flag("isotropic_omega_KE"));
  for (const auto& c : check_equivalences(make_W_theta(T, 0.4), T)) {
    INFO(c.id);
    CHECK(c.holds);
  }
}

TEST_CASE("equivalence checks on constructed planes") {
  std::mt19937_64 rng(3);
  HKModel hk = HKModel::build(2);
  for (const auto& c : check_equivalences(random_cone_complex_isotropic(rng, hk, 1, 2), hk)) {
    INFO(c.id);
    CHECK(c.holds);
  }
  // A complex plane for I1 that is not omega2-isotropic leaves the implication vacuous.
  auto checks = check_equivalences(random_cone_complex(rng, hk, 1, 2), hk);
  bool seen = false;
  for (const auto& c : checks)
    if (c.id == "cone.complex_I1_isotropic_omega2_implies_isotropic_omega3") {
      seen = true;
      CHECK_FALSE(c.premise);
      CHECK(c.holds);
    }
  CHECK(seen);
}

TEST_CASE("complex isotropic planes are isotropic for the third form") {
  require_scan("cone.complex_isotropic_implies_isotropic_omega3", 1, 10000);
  require_scan("cone.complex_isotropic_implies_isotropic_omega3", 2, 10000);
}

TEST_CASE("doubly Lagrangian planes are complex") {
  require_scan("cone.lagrangian_omega2_omega3_implies_complex_lagrangian", 1, 10000);
  require_scan("cone.lagrangian_omega2_omega3_implies_complex_lagrangian", 2, 1000);
}

TEST_CASE("HV-compatible planes: KE isotropy iff NK isotropy") {
  require_scan("twistor.hv_compatible_ke_iff_nk_isotropic", 1, 10000);
  require_scan("twistor.hv_compatible_ke_iff_nk_isotropic", 2, 10000);
}

TEST_CASE("isotropic search produces doubly isotropic planes") {
  std::mt19937_64 rng(4);
  TwistorModel T = TwistorModel::build(1);
  auto s = random_isotropic_plane(rng, {T.omega_KE(), T.omega_NK()}, 3);
  CHECK(s.residual <= 1e-12);
  CHECK(max_restriction(T.omega_KE(), s.plane) <= 1e-12);
  CHECK(max_restriction(T.omega_NK(), s.plane) <= 1e-12);
  CHECK_THROWS_AS(random_isotropic_plane(rng, {}, 2), InvalidArgument);
}

TEST_CASE("class invariants from scans") {
  for (const char* id :
       {"cone.kahler_square_maximizers_are_complex", "cone.upsilon1_maximizers_are_special_lagrangian",
        "link.cr_legendrian_I1_phases", "link.associative_horizontal_iff_minus_theta_I3",
        "twistor.lagrangian_ke_nk_implies_hv_split", "cone.complex_I1_or_I3_implies_cayley_Phi2",
        "cone.complex_isotropic_I1_implies_special_isotropic", "link.cr_I1_or_I3_implies_associative_phi2",
        "link.cr_isotropic_I1_implies_special_isotropic", "link.re_Gamma1_maximizers_orthogonal_to_A1",
        "link.theta_I3_maximizers_orthogonal_to_A1", "twistor.re_gamma0_maximizers_isotropic"})
    require_scan(id, 1, 500);
  require_scan("link.cr_legendrian_I1_phases", 2, 500);
  require_scan("twistor.lagrangian_ke_nk_implies_hv_split", 2, 200);
}

TEST_CASE("scan results do not depend on the worker count") {
  auto a = run_proposition_scan("twistor.re_gamma0_maximizers_isotropic", 1, 64, 5);
  setenv("CALIBER_THREADS", "3", 1);
  auto b = run_proposition_scan("twistor.re_gamma0_maximizers_isotropic", 1, 64, 5);
  unsetenv("CALIBER_THREADS");
  CHECK(a.to_json().dump() == b.to_json().dump());
}

TEST_CASE("the nearly Kahler isotropy claim fails on W0") {
  TwistorModel T = TwistorModel::build(1);
  const Plane W0 = make_W_theta(T, 0);
  CHECK(evaluate(T.gamma0().re, W0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_restriction(T.omega_NK(), W0) == doctest::Approx(0.5).epsilon(1e-12));
  auto r = nearly_kahler_isotropy_scan(1, 50, 0);
  CHECK_FALSE(r.pass());
  CHECK(r.worst == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("normal form of the quarter-turn plane") {
  for (int n = 1; n <= 2; ++n) {
    TwistorModel T = TwistorModel::build(n);
    auto r = normal_form_theta(make_W_theta(T, std::numbers::pi / 4), T);
    CHECK(r.theta == doctest::Approx(std::numbers::pi / 4).epsilon(1e-12));
    CHECK(r.dim_horizontal == 2);
    CHECK(r.dim_vertical == 1);
    CHECK(r.ke_isotropic);
    CHECK(r.hv_compatible);
    CHECK(r.consistent);
  }
}

TEST_CASE("normal form of W0") {
  TwistorModel T = TwistorModel::build(2);
  auto r = normal_form_theta(make_W_theta(T, 0), T);
  CHECK(std::abs(r.theta) < 1e-12);
  CHECK(r.dim_horizontal == 1);
  CHECK(r.dim_vertical == 0);
  CHECK_FALSE(r.ke_isotropic);
  CHECK(r.consistent);
}

TEST_CASE("normal form recovers theta on rotated planes") {
  const double th = 0.2;
  for (int n = 1; n <= 2; ++n) {
    TwistorModel T = TwistorModel::build(n);
    // Oracle: on the explicit frame the pairing is 2(c^2 - s^2) over vectors of norm sqrt(2).
    const Matrix V = v_theta_frame(T, th);
    const double oracle = evaluate(T.omega_KE(), std::vector<Vector>{V.col(0), V.col(1)}) / (V.col(0).norm() * V.col(1).norm());
    CHECK(oracle == doctest::Approx(std::cos(2 * th)).epsilon(1e-14));
    std::mt19937_64 rng(20 + n);
    for (int i = 0; i < 100; ++i) {
      const Plane E = reframe(rng, make_W_theta(T, th).transformed(random_sp_u1(rng, T)));
      auto r = normal_form_theta(E, T);
      CHECK(std::abs(r.theta - th) <= 1e-8);
      CHECK(std::abs(r.cos_2theta - oracle) <= 1e-12);
      CHECK(r.consistent);
    }
  }
}

TEST_CASE("normal form near theta = 0 keeps full precision") {
  TwistorModel T = TwistorModel::build(1);
  for (double th : {1e-9, 1e-6, 1e-3}) {
    auto r = normal_form_theta(make_W_theta(T, th), T);
    CHECK(std::abs(r.theta - th) <= 1e-14);
  }
}

TEST_CASE("normal form preconditions") {
  TwistorModel T = TwistorModel::build(1);
  std::mt19937_64 rng(5);
  CHECK_THROWS_AS(normal_form_theta(random_plane(rng, 6, 3), T), PreconditionFailed);
  CHECK_THROWS_AS(normal_form_theta(random_plane(rng, 6, 2), T), InvalidArgument);
  CHECK_THROWS_AS(quaternionic_envelope(random_plane(rng, 6, 3), T), PreconditionFailed);
}

TEST_CASE("quaternionic envelope of the normal form family") {
  TwistorModel T = TwistorModel::build(2);
  Matrix L0(T.dim(), 4);
  for (int a = 0; a < 4; ++a) L0.col(a) = T.e(1, a);
  std::mt19937_64 rng(6);
  for (double th : {0.0, 0.3, std::numbers::pi / 4}) {
    auto env = quaternionic_envelope(make_W_theta(T, th), T);
    CHECK(env.residual < 1e-8);
    CHECK(projector_gap(env.basis, L0) < 1e-10);
    // The basis is orthonormal and starts with a vector whose first nonzero entry is positive.
    CHECK((env.basis.transpose() * env.basis - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    for (int i = 0; i < T.dim(); ++i)
      if (std::abs(env.basis(i, 0)) > 1e-12) {
        CHECK(env.basis(i, 0) > 0);
        break;
      }
    // Rotating by Sp(n) rotates the envelope.
    const Matrix g = sp_u1_element(T, random_sp_n(rng, T), 0);
    auto rotated = quaternionic_envelope(make_W_theta(T, th).transformed(g), T);
    CHECK(rotated.residual < 1e-8);
    CHECK(projector_gap(rotated.basis, g * L0) < 1e-10);
  }
}

TEST_CASE("quaternionic envelope for n = 1 is the whole horizontal space") {
  TwistorModel T = TwistorModel::build(1);
  std::mt19937_64 rng(7);
  const Plane E = make_W_theta(T, 0.5).transformed(random_sp_u1(rng, T));
  auto env = quaternionic_envelope(E, T);
  CHECK(projector_gap(env.basis, Matrix::Identity(6, 4)) < 1e-10);
}

TEST_CASE("normal form is invariant under the stabilizer") {
  require_scan("twistor.normal_form_theta", 1, 2000);
  require_scan("twistor.normal_form_theta", 2, 2000);
}

TEST_CASE("phase scan at the allowed phases") {
  TwistorModel T = TwistorModel::build(1);
  ComassParams params;
  params.restarts = 40;
  auto rep = phase_rigidity_scan(T, {0.0, std::numbers::pi}, params);
  REQUIRE(rep.entries.size() == 2);
  for (const auto& e : rep.entries) {
    CHECK(e.phase_allowed);
    CHECK(std::abs(e.value - 1) <= 1e-6);
  }
  CHECK(rep.rigid);
}

TEST_CASE("excluded phases are reached by rotating the vertical plane") {
  // Rotating V by psi turns Re(gamma0) into Re(e^{-i psi} gamma0); the phase form
  // is therefore calibrated by the rotated W0, and the scan reports no gap.
  TwistorModel T = TwistorModel::build(1);
  const double th = std::numbers::pi / 2;
  Matrix R = Matrix::Identity(T.dim(), T.dim());
  R(T.f2(), T.f2()) = std::cos(th);
  R(T.f3(), T.f2()) = -std::sin(th);
  R(T.f2(), T.f3()) = std::sin(th);
  R(T.f3(), T.f3()) = std::cos(th);
  const Plane E = make_W_theta(T, 0).transformed(R);
  CHECK(evaluate(T.re_gamma_phase(th), E) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(approx_equal(pullback(T.re_gamma_phase(th), R), T.gamma0().re, 1e-12));
  ComassParams params;
  params.restarts = 40;
  auto rep = phase_rigidity_scan(T, {th}, params);
  CHECK_FALSE(rep.entries[0].phase_allowed);
  CHECK(rep.entries[0].value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_FALSE(rep.rigid);
  CHECK(rep.gap < 1e-6);
}
