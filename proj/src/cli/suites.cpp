#include "caliber/cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "caliber/calib/comass.hpp"
#include "caliber/calib/semicalibration.hpp"
#include "caliber/cli/registry.hpp"
#include "caliber/errors.hpp"
#include "caliber/model/groups.hpp"
#include "caliber/model/link_frame.hpp"
#include "caliber/model/twistor.hpp"
#include "caliber/planes/classify.hpp"
#include "caliber/planes/generators.hpp"
#include "caliber/planes/normal_form.hpp"
#include "caliber/planes/scans.hpp"
#include "caliber/symforms/identities.hpp"

namespace caliber {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::json;

constexpr double kComassTol = 1e-6;
constexpr double kOracleTol = 1e-7;
constexpr double kExactTol = 1e-12;
constexpr double kThetaTol = 1e-8;
constexpr int kPhaseRestarts = 400;

struct Outcome {
  bool pass = false;
  double witness = 0;
  std::optional<double> tol;
  json detail = json::object();
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void add_check(SuiteReport& rep, std::string id, const std::function<Outcome()>& fn, bool timed = true) {
  const auto t0 = Clock::now();
  CheckRecord c;
  c.id = std::move(id);
  try {
    Outcome o = fn();
    c.pass = o.pass;
    c.witness = o.witness;
    c.tol = o.tol;
    c.detail = std::move(o.detail);
  } catch (const Error& e) {
    c.pass = false;
    c.witness = INFINITY;
    c.detail = {{"error", e.what()}};
  }
  if (timed) c.elapsed_ms = ms_since(t0);
  rep.checks.push_back(std::move(c));
}

std::mt19937_64 seeded(std::uint64_t seed, std::uint32_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), salt};
  return std::mt19937_64(seq);
}

Outcome within(double deviation, double tol, json detail = json::object()) {
  return {std::isfinite(deviation) && deviation <= tol, deviation, tol, std::move(detail)};
}

ComassParams params_for(const SuiteOptions& o, int restarts) {
  ComassParams p;
  p.restarts = restarts;
  p.seed = o.seed;
  return p;
}

// Cone frame of the tangent cone over a link plane given in frame coordinates.
Plane cone_over(const LinkFrame& L, const Plane& P) {
  Matrix M(L.dim() + 1, P.degree() + 1);
  M.col(0) = L.point();
  M.rightCols(P.degree()) = L.frame() * P.frame();
  return Plane::from_frame(M);
}

double largest_component_along(const std::vector<Plane>& planes, const Vector& e) {
  double worst = 0;
  for (const Plane& P : planes) worst = std::max(worst, (P.frame().transpose() * e).norm());
  return worst;
}

// ---------------------------------------------------------------- identities

void identities_suite(SuiteReport& rep) {
  const int n = rep.options.n;
  for (const auto& r : structure_identities(n))
    add_check(rep, "identity." + r.name, [&] {
      json d = {{"statement", r.statement}, {"residual_terms", r.residual_terms}};
      if (!r.leading.empty()) d["leading"] = r.leading;
      return Outcome{r.pass(), static_cast<double>(r.residual_terms), 0.0, d};
    }, false);
  for (const auto& r : descent_checks(n))
    add_check(rep, "descent." + r.name, [&] {
      return Outcome{r.pass(), r.pass() ? 0.0 : 1.0, std::nullopt,
                     {{"contraction_vanishes", r.contraction_vanishes},
                      {"derivative_contraction_vanishes", r.derivative_contraction_vanishes},
                      {"expected_to_descend", r.expected_to_descend}}};
    }, false);
}

// ---------------------------------------------------------------- cones

void cones_suite(SuiteReport& rep) {
  for (const auto& r : cone_reconstructions(rep.options.n))
    add_check(rep, "cone_potential." + r.name, [&] {
      json d = {{"statement", r.statement}, {"residual_terms", r.residual_terms}};
      if (!r.leading.empty()) d["leading"] = r.leading;
      return Outcome{r.pass(), static_cast<double>(r.residual_terms), 0.0, d};
    }, false);
}

// ---------------------------------------------------------------- calibrations

std::vector<std::string> comass_one_names(int n) {
  std::vector<std::string> out = {"re_upsilon1", "Phi2", "phi2", "re_gamma1", "re_psi1", "re_gamma0"};
  for (int k = 2; k <= n + 1; ++k) {
    out.push_back("omega1_pow" + std::to_string(k));
    out.push_back("theta_I" + std::to_string(2 * k));
    out.push_back("theta_I" + std::to_string(2 * k - 1));
  }
  for (int k = 1; k <= n; ++k) out.push_back("cr1_deg" + std::to_string(2 * k + 1));
  return out;
}

void calibrations_suite(SuiteReport& rep) {
  const SuiteOptions& o = rep.options;
  const int n = o.n;
  const HKModel hk = HKModel::build(n);
  const LinkFrame L(n);
  const TwistorModel T = TwistorModel::build(n);

  for (const std::string& name : comass_one_names(n))
    add_check(rep, "comass_one." + name, [&] {
      const NamedForm f = resolve_form(name, n);
      const ComassResult r = comass_search(f.form.re, f.form.degree(), params_for(o, o.restarts));
      return within(std::abs(r.value - 1), kComassTol,
                    {{"space", space_name(f.space)},
                     {"value", r.value},
                     {"converged_fraction", r.converged_fraction},
                     {"maximizers", r.maximizers.size()}});
    });

  for (int N : {6, 8, 12})
    add_check(rep, "comass_oracle.dim" + std::to_string(N), [&, N] {
      std::mt19937_64 rng = seeded(o.seed, static_cast<std::uint32_t>(N));
      double worst = 0;
      const int forms = 50;
      for (int i = 0; i < forms; ++i) {
        Matrix A(N, N);
        for (int c = 0; c < N; ++c) A.col(c) = gaussian_vector(rng, N);
        const AltForm f = from_skew_matrix(A - A.transpose());
        ComassParams p = params_for(o, o.restarts);
        p.seed = o.seed + static_cast<std::uint64_t>(i) * 1000;
        worst = std::max(worst, std::abs(comass_search(f, 2, p).value - comass_2form_exact(f)));
      }
      return within(worst, kOracleTol, {{"forms", forms}});
    });

  const Vector A1 = Vector::Unit(L.dim(), 0);
  const std::vector<std::pair<std::string, AltForm>> split_forms = {{"re_gamma1", L.gamma(1).re},
                                                                    {"theta_I3", L.theta(1, 3)}};
  for (const auto& [name, f] : split_forms)
    add_check(rep, "splitting." + name + "_orthogonal_to_A1", [&] {
      const ComassResult r = comass_search(f, f.degree(), params_for(o, o.restarts));
      const double along = largest_component_along(r.maximizers, A1);
      return Outcome{splitting_support(f, A1, r.maximizers, kComassTol) && along <= kComassTol, along, kComassTol,
                     {{"maximizers", r.maximizers.size()}}};
    });

  add_check(rep, "isotropy.re_upsilon1_maximizers_omega1", [&] {
    const AltForm f = hk.upsilon(1).re;
    const ComassResult r = comass_search(f, f.degree(), params_for(o, o.restarts));
    const IsotropyCheck c = isotropy_of_maximizers(f, hk.I(1), hk.omega(1), r.maximizers, kComassTol);
    return Outcome{c.holds, c.worst, kComassTol, {{"maximizers", r.maximizers.size()}}};
  });
  add_check(rep, "isotropy.re_gamma0_maximizers_J_minus", [&] {
    const AltForm f = T.gamma0().re;
    const ComassResult r = comass_search(f, 3, params_for(o, o.restarts));
    const IsotropyCheck c = isotropy_of_maximizers(f, T.J_minus(), kahler_form(T.J_minus()), r.maximizers, kComassTol);
    return Outcome{c.holds, c.worst, kComassTol, {{"maximizers", r.maximizers.size()}}};
  });

  std::vector<bool> horizontal(T.dim(), true);
  horizontal[T.f2()] = horizontal[T.f3()] = false;
  add_check(rep, "transport.scaling_re_gamma0", [&] {
    const Transported s = transport_by_scaling(T.gamma0().re, std::sqrt(2.0), 2, horizontal);
    const double v = comass_search_metric(s.form, s.metric, params_for(o, o.restarts)).value;
    return within(std::abs(v - 1), kComassTol, {{"value", v}});
  });
  add_check(rep, "transport.submersion_re_gamma0", [&] {
    const Transported s = transport_by_submersion(T.gamma0().re, T.link_projection());
    const double diff = max_abs_diff(s.form, L.gamma(1).re);
    const double v = comass_search(s.form, 3, params_for(o, o.restarts)).value;
    return within(std::max(diff, std::abs(v - 1)), kComassTol, {{"value", v}, {"difference_from_re_gamma1", diff}});
  });

  add_check(rep, "reduction.Phi1_along_e10", [&] {
    const LineReduction r = reduce_along_line(hk.cayley(1), hk.basis(1, 0), nullptr, true, params_for(o, o.restarts));
    const double v = r.alpha_comass.value_or(INFINITY);
    return within(std::abs(v - 1), kComassTol, {{"alpha_comass", v}});
  });

  add_check(rep, "hook.re_gamma0_horizontal_vector", [&] {
    std::mt19937_64 rng = seeded(o.seed, 17);
    double worst = 0;
    const int vectors = 5;
    for (int t = 0; t < vectors; ++t) {
      Vector v = Vector::Zero(T.dim());
      v.head(4 * n) = gaussian_vector(rng, 4 * n);
      v.normalize();
      const AltForm f = interior(v, T.gamma0().re);
      const ComassResult r = comass_search(f, 2, params_for(o, std::max(1, o.restarts / 4)));
      Matrix B(T.dim(), 6);
      B << v, T.J(1) * v, T.J(2) * v, T.J(3) * v, T.f(2), T.f(3);
      const Matrix Q = orthonormalize(B);
      worst = std::max({worst, std::abs(comass_2form_exact(f) - 1), std::abs(r.value - 1)});
      for (const Plane& m : r.maximizers) worst = std::max(worst, (m.frame() - Q * (Q.transpose() * m.frame())).norm());
    }
    return within(worst, kComassTol, {{"vectors", vectors}});
  });

  std::vector<std::tuple<std::string, CAltForm, CAltForm>> pairs = {
      {"upsilon1_psi1", hk.upsilon(1), L.psi(1)},
      {"Phi1_phi1", CAltForm::real(hk.cayley(1)), CAltForm::real(L.phi(1))},
      {"omega1_alpha1", CAltForm::real(hk.omega(1)), CAltForm::real(L.alpha(1))}};
  for (int k = 1; k <= n + 1; ++k)
    pairs.emplace_back("theta_I" + std::to_string(2 * k) + "_theta_I" + std::to_string(2 * k - 1),
                       CAltForm::real(hk.theta(1, 2 * k)), CAltForm::real(L.theta(1, 2 * k - 1)));
  for (int k = 1; k <= n; ++k)
    pairs.emplace_back("omega1_pow" + std::to_string(k + 1) + "_cr1_deg" + std::to_string(2 * k + 1),
                       CAltForm::real(hk.omega_power(1, k + 1)), CAltForm::real(L.cr_form(1, k)));
  for (const auto& [name, cone_form, link_form] : pairs)
    add_check(rep, "correspondence.link_part_" + name,
              [&] { return within(max_abs_diff(L.link_part(cone_form), link_form), kExactTol); });

  const int samples = std::min(o.samples, 200);
  add_check(rep, "correspondence.cone_complex_iff_cr_I1", [&] {
    std::mt19937_64 rng = seeded(o.seed, 23);
    int disagreements = 0, cr = 0;
    for (int i = 0; i < samples; ++i) {
      const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      const Plane P = i % 2 == 0 ? reframe(rng, random_link_cr(rng, L, 1, m)) : random_plane(rng, L.dim(), 2 * m + 1);
      const bool link_side = classify_plane(P, L).flag("cr_I1");
      const bool cone_side = classify_plane(cone_over(L, P), hk).flag("complex_I1");
      cr += link_side;
      disagreements += link_side != cone_side;
    }
    return Outcome{disagreements == 0 && cr > 0, static_cast<double>(disagreements), 0.0,
                   {{"samples", samples}, {"cr_planes", cr}}};
  });
  add_check(rep, "correspondence.cone_isotropic_iff_alpha_isotropic", [&] {
    std::mt19937_64 rng = seeded(o.seed, 29);
    // Coordinates of the complement of A1 in the frame.
    const Matrix B = Matrix::Identity(L.dim(), L.dim()).rightCols(L.dim() - 1);
    const AltForm omega_perp = pullback(L.Omega(1), B);
    int disagreements = 0, iso = 0;
    for (int i = 0; i < samples; ++i) {
      const int k = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(2 * n));
      const Plane P = i % 2 == 0 ? Plane::from_frame(B * random_isotropic_plane(rng, {omega_perp}, k).plane.frame())
                                 : random_plane(rng, L.dim(), k);
      const bool link_side = classify_plane(P, L).flag("alpha_isotropic1");
      const bool cone_side = classify_plane(cone_over(L, P), hk).flag("isotropic_omega1");
      iso += link_side;
      disagreements += link_side != cone_side;
    }
    return Outcome{disagreements == 0 && iso > 0, static_cast<double>(disagreements), 0.0,
                   {{"samples", samples}, {"isotropic_planes", iso}}};
  });
}

// ---------------------------------------------------------------- propositions

void propositions_suite(SuiteReport& rep) {
  const SuiteOptions& o = rep.options;
  for (const auto& info : proposition_scan_catalog())
    add_check(rep, info.id, [&] {
      const ScanResult r = run_proposition_scan(info.id, o.n, o.samples, o.seed);
      return Outcome{r.pass(), r.worst, std::nullopt, r.to_json()};
    });
  const ScanResult nk = nearly_kahler_isotropy_scan(o.n, std::max(1, o.samples / 10), o.seed);
  rep.findings.push_back({nk.id,
                          "Re(gamma0)-calibrated planes are not omega_NK-isotropic; W_0 is a counterexample. "
                          "Isotropy holds for the Kahler form of J_minus.",
                          nk.pass(), nk.to_json()});
}

// ---------------------------------------------------------------- normal form

std::string theta_label(double th) {
  if (std::abs(th - std::numbers::pi / 4) < 1e-15) return "pi_over_4";
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", th);
  return buf;
}

void normalform_suite(SuiteReport& rep) {
  const SuiteOptions& o = rep.options;
  const int n = o.n;
  const TwistorModel T = TwistorModel::build(n);
  std::vector<double> thetas;
  for (int i = 0; i <= 7; ++i) thetas.push_back(0.1 * i);
  thetas.push_back(std::numbers::pi / 4);
  const int planes = 100;

  for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
    const double th = thetas[ti];
    add_check(rep, "normal_form.theta_" + theta_label(th), [&, th, ti] {
      std::mt19937_64 rng = seeded(o.seed, static_cast<std::uint32_t>(100 + ti));
      const bool quarter = std::abs(th - std::numbers::pi / 4) < 1e-15;
      const Plane W = make_W_theta(T, th);
      double worst = 0;
      int violations = 0, inconsistent = 0;
      for (int i = 0; i < planes; ++i) {
        const Plane E = reframe(rng, W.transformed(random_sp_u1(rng, T)));
        const NormalFormResult r = normal_form_theta(E, T);
        worst = std::max(worst, std::abs(r.theta - th));
        const bool a = r.dim_horizontal == 2, b = r.hv_compatible, c = r.ke_isotropic, d = r.quarter_turn;
        violations += !(a == b && b == c && c == d && d == quarter);
        inconsistent += !r.consistent;
      }
      return Outcome{worst <= kThetaTol && violations == 0 && inconsistent == 0, worst, kThetaTol,
                     {{"planes", planes}, {"equivalence_violations", violations}, {"inconsistent", inconsistent}}};
    });
  }

  add_check(rep, "normal_form.envelope_is_rotated_standard_line", [&] {
    std::mt19937_64 rng = seeded(o.seed, 211);
    Matrix L0(T.dim(), 4);
    for (int a = 0; a < 4; ++a) L0.col(a) = T.e(1, a);
    double worst = 0;
    int count = 0;
    for (double th : thetas)
      for (int i = 0; i < 10; ++i, ++count) {
        const Matrix g = random_sp_u1(rng, T);
        const QuaternionicEnvelope env = quaternionic_envelope(reframe(rng, make_W_theta(T, th).transformed(g)), T);
        const Matrix gl = orthonormalize(g * L0);
        const Matrix diff = env.basis * env.basis.transpose() - gl * gl.transpose();
        worst = std::max({worst, env.residual, diff.cwiseAbs().maxCoeff()});
      }
    return within(worst, kThetaTol, {{"planes", count}});
  });

  add_check(rep, "stabilizer.sp_u1_fixes_gamma0_and_kahler_forms", [&] {
    std::mt19937_64 rng = seeded(o.seed, 223);
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      const Matrix g = random_sp_u1(rng, T);
      worst = std::max({worst, max_abs_diff(pullback(T.gamma0(), g), T.gamma0()),
                        max_abs_diff(pullback(T.omega_KE(), g), T.omega_KE()),
                        max_abs_diff(pullback(T.omega_NK(), g), T.omega_NK())});
    }
    return within(worst, 1e-10, {{"elements", 20}});
  });
  add_check(rep, "stabilizer.u2n_u1_moves_gamma0", [&] {
    std::mt19937_64 rng = seeded(o.seed, 227);
    double least = INFINITY;
    for (int i = 0; i < 20; ++i)
      least = std::min(least, max_abs_diff(pullback(T.gamma0(), random_u2n_u1(rng, T)), T.gamma0()));
    return Outcome{least > 1e-6, least, 1e-6, {{"elements", 20}}};
  });

  ComassParams p = params_for(o, kPhaseRestarts);
  const double pi = std::numbers::pi;
  const PhaseRigidityReport phase = phase_rigidity_scan(T, {0.0, pi / 8, pi / 4, 3 * pi / 8, pi / 2, pi}, p);
  rep.findings.push_back({"twistor.phase_rigidity_of_re_gamma_phases",
                          "Rotating the vertical plane turns Re(gamma0) into Re(exp(-i theta) gamma0), so every phase "
                          "reaches comass 1 at the plane level.",
                          phase.rigid, phase.to_json()});
}

struct SuiteDef {
  int max_n;
  void (*run)(SuiteReport&);
};

const std::map<std::string, SuiteDef>& suites() {
  static const std::map<std::string, SuiteDef> defs = {{"calibrations", {3, calibrations_suite}},
                                                       {"cones", {2, cones_suite}},
                                                       {"identities", {2, identities_suite}},
                                                       {"normalform", {3, normalform_suite}},
                                                       {"propositions", {3, propositions_suite}}};
  return defs;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

bool SuiteReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

json SuiteReport::to_json(bool timing) const {
  json cs = json::array();
  for (const auto& c : checks) {
    json j = {{"id", c.id},
              {"status", c.pass ? "pass" : "fail"},
              {"witness", std::isfinite(c.witness) ? json(c.witness) : json(nullptr)},
              {"tol", c.tol ? json(*c.tol) : json(nullptr)},
              {"detail", c.detail}};
    if (timing) j["elapsed_ms"] = c.elapsed_ms ? json(*c.elapsed_ms) : json(nullptr);
    cs.push_back(j);
  }
  json fs = json::array();
  for (const auto& f : findings)
    fs.push_back({{"id", f.id}, {"summary", f.summary}, {"holds", f.holds}, {"detail", f.detail}});
  json out = {{"suite", suite},
              {"n", options.n},
              {"seed", options.seed},
              {"restarts", options.restarts},
              {"samples", options.samples},
              {"status", pass() ? "pass" : "fail"},
              {"checks", cs},
              {"findings", fs},
              {"coverage", coverage_table(*this)}};
  if (timing) out["elapsed_ms"] = elapsed_ms;
  return out;
}

std::string SuiteReport::to_text(bool timing) const {
  std::ostringstream os;
  int failed = 0;
  for (const auto& c : checks) failed += !c.pass;
  os << "suite " << suite << "  n=" << options.n << "  seed=" << options.seed << "  " << (pass() ? "PASS" : "FAIL")
     << "  (" << checks.size() - failed << "/" << checks.size() << " checks pass)\n";
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.id.size());
  for (const auto& c : checks) {
    os << "  " << (c.pass ? "pass " : "FAIL ") << c.id << std::string(width - c.id.size() + 2, ' ') << "witness "
       << fmt(c.witness);
    if (c.tol) os << "  tol " << fmt(*c.tol);
    if (timing && c.elapsed_ms) os << "  " << fmt(*c.elapsed_ms) << " ms";
    os << "\n";
  }
  if (!findings.empty()) {
    os << "findings\n";
    for (const auto& f : findings) os << "  " << (f.holds ? "holds " : "fails ") << f.id << "\n    " << f.summary << "\n";
  }
  os << "coverage\n";
  for (const auto& e : coverage_table(*this)) {
    if (e["covered"].is_null()) continue;
    os << "  [" << (e["covered"].get<bool>() ? "x" : " ") << "] " << e["statement"].get<std::string>() << " ("
       << e["checks"].size() << ")\n";
  }
  if (timing) os << "elapsed " << fmt(elapsed_ms) << " ms\n";
  return os.str();
}

const std::vector<CoverageEntry>& coverage_entries() {
  static const std::vector<CoverageEntry> entries = {
      {"Structure equations of the 3-Sasakian link", "identities",
       {"identity.d_alpha", "identity.d_Omega", "identity.d_kappa"}},
      {"Exterior derivative of the special Legendrian forms Psi_p", "identities", {"identity.d_psi"}},
      {"Exterior derivatives of Gamma_p, Xi_p and OmegaTilde_p", "identities",
       {"identity.d_re_gamma", "identity.d_im_gamma", "identity.d_xi", "identity.d_omega_tilde",
        "identity.d_re_2gamma"}},
      {"The sum of the kappa squares is exact", "identities", {"identity.exact_kappa_quartic"}},
      {"Semibasic descent along the first Reeb field", "identities", {"descent."}},
      {"Conical forms split into radial and link parts", "cones", {"_split_"}},
      {"Closed homogeneous forms have explicit potentials", "cones", {"_potential"}},
      {"Kahler powers, Cayley and special Lagrangian forms have comass one", "calibrations",
       {"comass_one.omega1_pow", "comass_one.Phi", "comass_one.re_upsilon"}},
      {"Special isotropic forms on the cone and the link have comass one", "calibrations", {"comass_one.theta_"}},
      {"Associative, CR, special Legendrian and Re(Gamma1) forms on the link have comass one", "calibrations",
       {"comass_one.phi", "comass_one.re_gamma1", "comass_one.re_psi", "comass_one.cr"}},
      {"Re(gamma0) has comass one on the twistor model", "calibrations", {"comass_one.re_gamma0"}},
      {"Contraction with a line of a rich semi-calibration is a semi-calibration", "calibrations", {"reduction."}},
      {"Calibrated planes split off a direction the form does not see", "calibrations", {"splitting."}},
      {"Semi-calibrations survive scaling of the horizontal metric", "calibrations", {"transport.scaling"}},
      {"Semi-calibrations pull back along Riemannian submersions", "calibrations", {"transport.submersion"}},
      {"Planes calibrated by a form of pure type are isotropic", "calibrations", {"isotropy."}},
      {"Contracting Re(gamma0) with a horizontal vector gives a semi-calibration supported on L + V", "calibrations",
       {"hook."}},
      {"Cone forms restrict to the corresponding link forms", "calibrations", {"correspondence.link_part"}},
      {"A link plane is CR iff its cone is complex", "calibrations", {"correspondence.cone_complex_iff_cr"}},
      {"A link plane is alpha-isotropic iff its cone is omega-isotropic", "calibrations",
       {"correspondence.cone_isotropic"}},
      {"Comass search agrees with the exact 2-form comass", "calibrations", {"comass_oracle."}},
      {"Complex planes isotropic for a second Kahler form are isotropic for the third", "propositions",
       {"cone.complex_isotropic_implies_isotropic_omega3"}},
      {"Planes Lagrangian for omega2 and omega3 are complex Lagrangian with fixed upsilon phases", "propositions",
       {"cone.lagrangian_omega2_omega3"}},
      {"Complex and complex isotropic planes are Cayley", "propositions",
       {"cone.complex_I1_or_I3_implies_cayley", "cone.complex_isotropic_I1_implies_special_isotropic"}},
      {"Kahler-power maximizers are complex", "propositions", {"cone.kahler_square_maximizers"}},
      {"Re(upsilon1) maximizers are special Lagrangian", "propositions", {"cone.upsilon1_maximizers"}},
      {"CR Legendrian planes have psi phases i^(n+1) and 1", "propositions", {"link.cr_legendrian_I1_phases"}},
      {"CR and CR isotropic link planes are associative", "propositions",
       {"link.cr_I1_or_I3_implies_associative", "link.cr_isotropic_I1_implies_special_isotropic"}},
      {"Associative planes orthogonal to A1 are the -theta_I3 special isotropic planes", "propositions",
       {"link.associative_horizontal_iff"}},
      {"Maximizers of Re(Gamma1) and theta_I3 are orthogonal to A1", "propositions",
       {"link.re_Gamma1_maximizers", "link.theta_I3_maximizers"}},
      {"On HV-compatible planes KE isotropy is NK isotropy", "propositions", {"twistor.hv_compatible_ke_iff_nk"}},
      {"KE and NK Lagrangian planes split into horizontal and vertical parts", "propositions",
       {"twistor.lagrangian_ke_nk"}},
      {"Re(gamma0)-calibrated planes are isotropic for the Kahler form of J_minus", "propositions",
       {"twistor.re_gamma0_maximizers_isotropic"}},
      {"Re(gamma0)-calibrated planes and omega_NK isotropy", "propositions", {"nearly_kahler_isotropic"}},
      {"The normal form angle is invariant under Sp(n)U(1)", "propositions", {"twistor.normal_form_theta"}},
      {"Sp(n)U(1) is the stabilizer of gamma0", "normalform", {"stabilizer."}},
      {"Normal form of Re(gamma0)-calibrated 3-planes and the four-way equivalence", "normalform",
       {"normal_form.theta_"}},
      {"Quaternionic envelope of a Re(gamma0)-calibrated 3-plane", "normalform", {"normal_form.envelope"}},
      {"Phases of Re(exp(-i theta) gamma0)-calibrated planes", "normalform", {"twistor.phase_rigidity"}},
  };
  return entries;
}

json coverage_table(const SuiteReport& report) {
  std::vector<std::string> ids;
  for (const auto& c : report.checks) ids.push_back(c.id);
  for (const auto& f : report.findings) ids.push_back(f.id);
  json out = json::array();
  for (const auto& e : coverage_entries()) {
    json matched = json::array();
    for (const auto& id : ids)
      if (std::any_of(e.patterns.begin(), e.patterns.end(),
                      [&](const std::string& p) { return id.find(p) != std::string::npos; }))
        matched.push_back(id);
    const bool own = e.suite == report.suite;
    out.push_back({{"statement", e.statement},
                   {"suite", e.suite},
                   {"checks", matched},
                   {"covered", own ? json(!matched.empty()) : json(nullptr)}});
  }
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, def] : suites()) out.push_back(name);
  return out;
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& options) {
  const auto it = suites().find(suite);
  if (it == suites().end()) throw InvalidArgument("unknown suite '" + suite + "'");
  if (options.n < 1 || options.n > it->second.max_n)
    throw InvalidArgument("suite " + suite + " supports n from 1 to " + std::to_string(it->second.max_n));
  if (options.restarts < 1 || options.samples < 1) throw InvalidArgument("restarts and samples must be positive");
  const auto t0 = Clock::now();
  SuiteReport rep;
  rep.suite = suite;
  rep.options = options;
  it->second.run(rep);
  std::sort(rep.checks.begin(), rep.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  std::sort(rep.findings.begin(), rep.findings.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

}  // namespace caliber
