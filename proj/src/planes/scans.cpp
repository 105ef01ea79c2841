#include "caliber/planes/scans.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>

#include "caliber/calib/comass.hpp"
#include "caliber/calib/semicalibration.hpp"
#include "caliber/model/groups.hpp"
#include "caliber/parallel.hpp"
#include "caliber/planes/classify.hpp"
#include "caliber/planes/generators.hpp"
#include "caliber/planes/normal_form.hpp"

namespace caliber {

namespace {

std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) h = (h ^ c) * 16777619u;
  return h;
}

constexpr double kExact = 1e-9;    // tolerance for constructed planes
constexpr double kAscent = 1e-6;   // tolerance for optimizer maximizers
constexpr double kTop = 1 - 1e-9;  // an ascent counts as a maximizer above this value

SampleOutcome from_check(const std::vector<EquivalenceCheck>& checks, const std::string& prefix) {
  SampleOutcome o;
  bool found = false;
  for (const auto& c : checks) {
    if (c.id.rfind(prefix, 0) != 0) continue;
    if (!found) o.premise = c.premise;
    found = true;
    o.premise = o.premise && c.premise;
    o.holds = o.holds && c.holds;
    o.witness = std::max(o.witness, c.witness);
  }
  if (!found) throw InternalInconsistency("no equivalence check with prefix " + prefix);
  return o;
}

// Rejects the sample as a premise when it fails its own construction hypothesis.
SampleOutcome requiring(bool hypothesis, SampleOutcome o) {
  if (!hypothesis) return {false, true, 0};
  return o;
}

Plane random_orientation(std::mt19937_64& rng, const Plane& P) {
  Plane Q = reframe(rng, P);
  if (std::bernoulli_distribution(0.5)(rng)) {
    Matrix F = Q.frame();
    F.col(0) = -F.col(0);
    return Plane::from_frame(F);
  }
  return Q;
}

AscentResult ascend(const AltForm& f, int k, std::mt19937_64& rng) {
  return stiefel_ascent(f, random_plane(rng, f.dim(), k).frame(), 500, 1e-10);
}

// Scan definitions: id -> (statement, factory(n) returning the per-sample function).
using SampleFn = std::function<SampleOutcome(std::mt19937_64&, int)>;
struct Definition {
  std::string statement;
  std::function<SampleFn(int)> make;
};

const std::map<std::string, Definition>& definitions() {
  static const std::map<std::string, Definition> defs = [] {
    std::map<std::string, Definition> d;

    d["cone.complex_isotropic_implies_isotropic_omega3"] = {
        "I1-complex and omega2-isotropic planes are omega3-isotropic", [](int n) -> SampleFn {
          auto hk = std::make_shared<HKModel>(HKModel::build(n));
          auto cls = std::make_shared<std::vector<ConeClassifier>>();
          for (int m = 1; m <= n + 1; ++m) cls->emplace_back(*hk, 2 * m);
          return [hk, cls, n](std::mt19937_64& rng, int) {
            const int m = std::uniform_int_distribution<int>(1, n + 1)(rng);
            Plane P = random_orientation(rng, random_cone_complex_isotropic(rng, *hk, 1, m));
            auto r = (*cls)[m - 1].classify(P, kExact);
            return from_check(equivalences_from_report(r), "cone.complex_I1_isotropic_omega2");
          };
        }};

    d["cone.lagrangian_omega2_omega3_implies_complex_lagrangian"] = {
        "omega2- and omega3-Lagrangian planes are I1-complex with Upsilon2 phase i^(n+1) and Upsilon3 phase 1",
        [](int n) -> SampleFn {
          auto hk = std::make_shared<HKModel>(HKModel::build(n));
          auto cls = std::make_shared<ConeClassifier>(*hk, 2 * n + 2);
          return [hk, cls, n](std::mt19937_64& rng, int) {
            auto s = random_isotropic_plane(rng, {hk->omega(2), hk->omega(3)}, 2 * n + 2);
            auto r = cls->classify(s.plane, kExact);
            return from_check(equivalences_from_report(r), "cone.lagrangian_omega2_omega3");
          };
        }};

    d["cone.complex_I1_or_I3_implies_cayley_Phi2"] = {
        "I1-complex and I3-complex 4-planes are Phi2-Cayley", [](int n) -> SampleFn {
          auto hk = std::make_shared<HKModel>(HKModel::build(n));
          auto cls = std::make_shared<ConeClassifier>(*hk, 4);
          return [hk, cls](std::mt19937_64& rng, int i) {
            const int p = i % 2 ? 3 : 1;
            Plane P = random_orientation(rng, random_cone_complex(rng, *hk, p, 2));
            auto r = cls->classify(P, kExact);
            return from_check(equivalences_from_report(r), "cone.complex_I" + std::to_string(p) + "_implies_cayley");
          };
        }};

    d["cone.complex_isotropic_I1_implies_special_isotropic"] = {
        "I1-complex isotropic 4-planes are -Theta_J4 and Theta_K4 special isotropic and Phi2-Cayley",
        [](int n) -> SampleFn {
          auto hk = std::make_shared<HKModel>(HKModel::build(n));
          auto cls = std::make_shared<ConeClassifier>(*hk, 4);
          return [hk, cls](std::mt19937_64& rng, int) {
            Plane P = random_orientation(rng, random_cone_complex_isotropic(rng, *hk, 1, 2));
            auto r = cls->classify(P, kExact);
            return requiring(r.flag("complex_isotropic_I1"),
                             from_check(equivalences_from_report(r), "cone.complex_isotropic_I1"));
          };
        }};

    d["cone.kahler_square_maximizers_are_complex"] = {
        "maximizers of omega1^2/2 are I1-complex", [](int n) -> SampleFn {
          auto hk = std::make_shared<HKModel>(HKModel::build(n));
          auto f = std::make_shared<AltForm>(hk->omega_power(1, 2));
          return [hk, f](std::mt19937_64& rng, int) {
            auto a = ascend(*f, 4, rng);
            if (a.value < kTop) return SampleOutcome{};
            const double w = invariance_residual(hk->I(1), a.plane);
            return SampleOutcome{true, w <= kAscent, w};
          };
        }};

    d["cone.upsilon1_maximizers_are_special_lagrangian"] = {
        "maximizers of Re(Upsilon1) are omega1-Lagrangian with Im(Upsilon1) = 0", [](int n) -> SampleFn {
          auto hk = std::make_shared<HKModel>(HKModel::build(n));
          auto u = std::make_shared<CAltForm>(hk->upsilon(1));
          if (pure_type_degree(u->re, hk->I(1)) != 2 * n + 2)
            throw InternalInconsistency("Re(Upsilon1) is not of pure type");
          return [hk, u, n](std::mt19937_64& rng, int) {
            auto a = ascend(u->re, 2 * n + 2, rng);
            if (a.value < kTop) return SampleOutcome{};
            const double w = std::max(max_restriction(hk->omega(1), a.plane), std::abs(evaluate(u->im, a.plane)));
            return SampleOutcome{true, w <= kAscent, w};
          };
        }};

    d["link.cr_I1_or_I3_implies_associative_phi2"] = {
        "I1-CR and I3-CR 3-planes are phi2-associative", [](int n) -> SampleFn {
          auto frames = std::make_shared<std::vector<LinkFrame>>();
          std::mt19937_64 base(fnv1a("link base points"));
          frames->emplace_back(n);
          for (int b = 0; b < 3; ++b) {
            Vector x = gaussian_vector(base, 4 * n + 4);
            frames->emplace_back(n, x / x.norm());
          }
          auto cls = std::make_shared<std::vector<LinkClassifier>>();
          for (const auto& L : *frames) cls->emplace_back(L, 3);
          return [frames, cls](std::mt19937_64& rng, int i) {
            const int p = i % 2 ? 3 : 1;
            const std::size_t b = static_cast<std::size_t>(i / 2) % frames->size();
            Plane P = random_orientation(rng, random_link_cr(rng, (*frames)[b], p, 1));
            auto r = (*cls)[b].classify(P, kExact);
            return from_check(equivalences_from_report(r), "link.cr_I" + std::to_string(p) + "_implies");
          };
        }};

    d["link.cr_isotropic_I1_implies_special_isotropic"] = {
        "I1-CR isotropic 3-planes are -theta_J3 and theta_K3 special isotropic and phi2-associative",
        [](int n) -> SampleFn {
          auto L = std::make_shared<LinkFrame>(n);
          auto cls = std::make_shared<LinkClassifier>(*L, 3);
          return [L, cls](std::mt19937_64& rng, int) {
            Plane P = random_orientation(rng, random_link_cr_isotropic(rng, *L, 1, 1));
            auto r = cls->classify(P, kExact);
            return requiring(r.flag("cr_isotropic_I1"),
                             from_check(equivalences_from_report(r), "link.cr_isotropic_I1"));
          };
        }};

    d["link.cr_legendrian_I1_phases"] = {
        "I1-CR Legendrian planes have Psi2 phase i^(n+1) and Psi3 phase 1; alpha2,alpha3-Legendrian planes are "
        "I1-CR",
        [](int n) -> SampleFn {
          auto L = std::make_shared<LinkFrame>(n);
          auto cls = std::make_shared<LinkClassifier>(*L, 2 * n + 1);
          return [L, cls, n](std::mt19937_64& rng, int) {
            Plane P = random_orientation(rng, random_link_cr_isotropic(rng, *L, 1, n));
            auto checks = equivalences_from_report(cls->classify(P, kExact));
            SampleOutcome a = from_check(checks, "link.cr_legendrian_I1");
            SampleOutcome b = from_check(checks, "link.legendrian_alpha2_alpha3");
            return SampleOutcome{a.premise && b.premise, a.holds && b.holds, std::max(a.witness, b.witness)};
          };
        }};

    d["link.associative_horizontal_iff_minus_theta_I3"] = {
        "a 3-plane is -theta_I3 special isotropic iff it is phi2-associative and orthogonal to A1",
        [](int n) -> SampleFn {
          auto L = std::make_shared<LinkFrame>(n);
          auto cls = std::make_shared<LinkClassifier>(*L, 3);
          const int N = L->dim();
          auto inclusion = std::make_shared<Matrix>(Matrix::Identity(N, N).rightCols(N - 1));
          auto phi_h = std::make_shared<AltForm>(pullback(L->phi(2), *inclusion));
          auto minus_theta = std::make_shared<AltForm>(-1.0 * L->theta(1, 3));
          return [L, cls, inclusion, phi_h, minus_theta](std::mt19937_64& rng, int i) {
            Plane P;
            if (i % 2 == 0) {
              auto a = ascend(*phi_h, 3, rng);
              if (a.value < kTop) return SampleOutcome{};
              P = Plane::from_frame(*inclusion * a.plane.frame());
            } else {
              auto a = ascend(*minus_theta, 3, rng);
              if (a.value < kTop) return SampleOutcome{};
              P = a.plane;
            }
            return from_check(equivalences_from_report(cls->classify(P, kAscent)),
                              "link.associative_phi2_p1_horizontal");
          };
        }};

    d["link.re_Gamma1_maximizers_orthogonal_to_A1"] = {
        "maximizers of Re(Gamma1) are orthogonal to A1", [](int n) -> SampleFn {
          auto L = std::make_shared<LinkFrame>(n);
          auto f = std::make_shared<AltForm>(L->gamma(1).re);
          auto e = std::make_shared<Vector>(Vector::Unit(L->dim(), 0));
          if (max_abs_coeff(interior(*e, *f)) > 1e-12) throw InternalInconsistency("A1 does not annihilate Re(Gamma1)");
          return [f, e](std::mt19937_64& rng, int) {
            auto a = ascend(*f, 3, rng);
            if (a.value < kTop) return SampleOutcome{};
            const double w = (a.plane.frame().transpose() * *e).cwiseAbs().maxCoeff();
            return SampleOutcome{true, w <= kAscent, w};
          };
        }};

    d["link.theta_I3_maximizers_orthogonal_to_A1"] = {
        "maximizers of theta_I3 are orthogonal to A1", [](int n) -> SampleFn {
          auto L = std::make_shared<LinkFrame>(n);
          auto f = std::make_shared<AltForm>(L->theta(1, 3));
          auto e = std::make_shared<Vector>(Vector::Unit(L->dim(), 0));
          if (max_abs_coeff(interior(*e, *f)) > 1e-12) throw InternalInconsistency("A1 does not annihilate theta_I3");
          return [f, e](std::mt19937_64& rng, int) {
            auto a = ascend(*f, 3, rng);
            if (a.value < kTop) return SampleOutcome{};
            const double w = (a.plane.frame().transpose() * *e).cwiseAbs().maxCoeff();
            return SampleOutcome{true, w <= kAscent, w};
          };
        }};

    d["twistor.re_gamma0_maximizers_isotropic"] = {
        "maximizers of Re(gamma0) are isotropic for the Kahler form of J_minus", [](int n) -> SampleFn {
          auto T = std::make_shared<TwistorModel>(TwistorModel::build(n));
          auto w = std::make_shared<AltForm>(kahler_form(T->J_minus()));
          if (pure_type_degree(T->gamma0().re, T->J_minus()) != 3)
            throw InternalInconsistency("Re(gamma0) is not of pure type for J_minus");
          return [T, w](std::mt19937_64& rng, int) {
            auto a = ascend(T->gamma0().re, 3, rng);
            if (a.value < kTop) return SampleOutcome{};
            const double r = max_restriction(*w, a.plane);
            return SampleOutcome{true, r <= kAscent, r};
          };
        }};

    d["twistor.hv_compatible_ke_iff_nk_isotropic"] = {
        "HV-compatible planes are omega_KE-isotropic iff omega_NK-isotropic", [](int n) -> SampleFn {
          auto T = std::make_shared<TwistorModel>(TwistorModel::build(n));
          auto cls = std::make_shared<std::map<int, TwistorClassifier>>();
          for (int k = 1; k <= 2 * n + 2; ++k) cls->emplace(k, TwistorClassifier(*T, k));
          return [T, cls, n](std::mt19937_64& rng, int i) {
            const bool iso = i % 2 == 0;
            const int mh = std::uniform_int_distribution<int>(iso ? 0 : 1, 2 * n)(rng);
            const int mv = std::uniform_int_distribution<int>(mh == 0 ? 1 : 0, iso ? 1 : 2)(rng);
            Plane P = random_orientation(rng, random_hv_plane(rng, *T, mh, mv, iso));
            auto r = cls->at(mh + mv).classify(P, kExact);
            return requiring(r.flag("hv_compatible"),
                             from_check(equivalences_from_report(r), "twistor.hv_compatible_implies"));
          };
        }};

    d["twistor.lagrangian_ke_nk_implies_hv_split"] = {
        "omega_KE- and omega_NK-Lagrangian planes split as 2n horizontal plus 1 vertical", [](int n) -> SampleFn {
          auto T = std::make_shared<TwistorModel>(TwistorModel::build(n));
          auto cls = std::make_shared<TwistorClassifier>(*T, 2 * n + 1);
          return [T, cls, n](std::mt19937_64& rng, int) {
            auto s = random_isotropic_plane(rng, {T->omega_KE(), T->omega_NK()}, 2 * n + 1);
            return from_check(equivalences_from_report(cls->classify(s.plane, kExact)), "twistor.lagrangian_ke_nk");
          };
        }};

    d["twistor.normal_form_theta"] = {
        "normal_form_theta recovers theta on Sp(n)U(1)-rotated W_theta and is invariant; the four normal form "
        "conditions agree",
        [](int n) -> SampleFn {
          auto T = std::make_shared<TwistorModel>(TwistorModel::build(n));
          auto cls = std::make_shared<TwistorClassifier>(*T, 3);
          return [T, cls](std::mt19937_64& rng, int i) {
            double th = std::uniform_real_distribution<double>(0, std::numbers::pi / 4)(rng);
            if (i % 10 == 0) th = 0;
            if (i % 10 == 1) th = std::numbers::pi / 4;
            const Plane W = make_W_theta(*T, th);
            const Plane E1 = reframe(rng, W.transformed(random_sp_u1(rng, *T)));
            const Plane E2 = reframe(rng, W.transformed(random_sp_u1(rng, *T)));
            const auto a = normal_form_theta(E1, *T), b = normal_form_theta(E2, *T);
            SampleOutcome hv = from_check(equivalences_from_report(cls->classify(E1, kExact)), "twistor.re_gamma0");
            const double w = std::max(std::abs(a.theta - th), std::abs(a.theta - b.theta));
            const bool ok = std::abs(a.theta - th) <= 1e-8 && std::abs(a.theta - b.theta) <= 1e-9 && a.consistent &&
                            a.envelope.residual <= 1e-8 && hv.holds;
            return SampleOutcome{true, ok, w};
          };
        }};

    return d;
  }();
  return defs;
}

}  // namespace

nlohmann::json ScanResult::to_json() const {
  return {{"id", id},
          {"statement", statement},
          {"samples", samples},
          {"premise_count", premise_count},
          {"counterexamples", counterexamples},
          {"worst", worst},
          {"pass", pass()}};
}

ScanResult run_scan(std::string id, std::string statement, int samples, std::uint64_t seed,
                    const std::function<SampleOutcome(std::mt19937_64&, int)>& sample) {
  if (samples < 1) throw InvalidArgument("scan needs at least one sample");
  std::vector<SampleOutcome> slots(static_cast<std::size_t>(samples));
  const std::uint32_t salt = fnv1a(id);
  parallel_for(slots.size(), [&](std::size_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), salt,
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    slots[i] = sample(rng, static_cast<int>(i));
  });
  ScanResult r{std::move(id), std::move(statement), samples, 0, 0, 0};
  for (const auto& s : slots) {
    if (!s.premise) continue;
    ++r.premise_count;
    r.counterexamples += s.holds ? 0 : 1;
    r.worst = std::max(r.worst, s.witness);
  }
  return r;
}

std::vector<ScanInfo> proposition_scan_catalog() {
  std::vector<ScanInfo> out;
  for (const auto& [id, def] : definitions()) out.push_back({id, def.statement});
  return out;
}

ScanResult run_proposition_scan(const std::string& id, int n, int samples, std::uint64_t seed) {
  auto it = definitions().find(id);
  if (it == definitions().end()) throw InvalidArgument("unknown proposition scan " + id);
  return run_scan(id, it->second.statement, samples, seed, it->second.make(n));
}

std::vector<ScanResult> proposition_scans(int n, int samples, std::uint64_t seed) {
  std::vector<ScanResult> out;
  for (const auto& [id, def] : definitions()) out.push_back(run_proposition_scan(id, n, samples, seed));
  return out;
}

ScanResult nearly_kahler_isotropy_scan(int n, int samples, std::uint64_t seed) {
  auto T = std::make_shared<TwistorModel>(TwistorModel::build(n));
  const Plane W0 = make_W_theta(*T, 0);
  const double w0 = max_restriction(T->omega_NK(), W0);
  ScanResult r = run_scan("twistor.re_gamma0_maximizers_nearly_kahler_isotropic",
                          "maximizers of Re(gamma0) are omega_NK-isotropic", samples, seed,
                          [T](std::mt19937_64& rng, int) {
                            auto a = ascend(T->gamma0().re, 3, rng);
                            if (a.value < kTop) return SampleOutcome{};
                            const double w = max_restriction(T->omega_NK(), a.plane);
                            return SampleOutcome{true, w <= kAscent, w};
                          });
  ++r.samples;
  ++r.premise_count;
  if (w0 > kAscent) ++r.counterexamples;
  r.worst = std::max(r.worst, w0);
  return r;
}

}  // namespace caliber
