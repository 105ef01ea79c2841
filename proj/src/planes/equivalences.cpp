#include <algorithm>
#include <cmath>

#include "caliber/planes/classify.hpp"

namespace caliber {

namespace {

struct Builder {
  const ClassificationReport& r;
  std::vector<EquivalenceCheck> out;

  bool f(const std::string& name) const { return r.flag(name); }
  double v(const std::string& name) const { return r.value(name); }

  // premise => every residual within tol; witness is the worst residual.
  void implication(std::string id, bool premise, std::initializer_list<double> residuals) {
    EquivalenceCheck c{std::move(id), premise, true, 0};
    if (premise) {
      for (double x : residuals) c.witness = std::max(c.witness, x);
      c.holds = c.witness <= r.tol;
    }
    out.push_back(std::move(c));
  }

  void implication_flag(std::string id, bool premise, const std::string& conclusion) {
    EquivalenceCheck c{std::move(id), premise, true, 0};
    if (premise) {
      c.holds = f(conclusion);
      c.witness = r.witness(conclusion);
    }
    out.push_back(std::move(c));
  }

  void equivalence(std::string id, bool lhs, bool rhs, double witness) {
    out.push_back({std::move(id), lhs || rhs, lhs == rhs, witness});
  }
};

// Real part of i^{-m} z.
double rotated_real(const ReportPhase& z, int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return z.re;
    case 1: return z.im;
    case 2: return -z.re;
    default: return -z.im;
  }
}

void cone_checks(Builder& b) {
  const auto& r = b.r;
  const int n = r.n, k = r.degree;
  for (int p = 1; p <= 3; ++p) {
    const int q = p % 3 + 1, s = (p + 1) % 3 + 1;
    const std::string P = std::to_string(p), Q = std::to_string(q), S = std::to_string(s);
    b.implication_flag("cone.complex_I" + P + "_isotropic_omega" + Q + "_implies_isotropic_omega" + S,
                       b.f("complex_I" + P) && b.f("isotropic_omega" + Q), "isotropic_omega" + S);
  }
  if (k == 2 * n + 2) {
    const bool prem = b.f("lagrangian_omega2") && b.f("lagrangian_omega3");
    b.implication_flag("cone.lagrangian_omega2_omega3_implies_complex_I1", prem, "complex_I1");
    double res2 = 0, res3 = 0;
    if (prem) {
      const double vol = b.v("kahler_volume_I1");
      res2 = std::abs(rotated_real(r.phase("upsilon2"), n + 1) - vol);
      res3 = std::abs(r.phase("upsilon3").re - vol);
    }
    b.implication("cone.lagrangian_omega2_omega3_implies_upsilon2_phase", prem, {res2});
    b.implication("cone.lagrangian_omega2_omega3_implies_upsilon3_phase", prem, {res3});
  }
  if (k == 4) {
    for (int p : {1, 3}) {
      const std::string P = std::to_string(p);
      const bool prem = b.f("complex_I" + P);
      b.implication("cone.complex_I" + P + "_implies_cayley_Phi2", prem,
                    {prem ? std::abs(b.v("Phi2") - b.v("kahler_volume_I" + P)) : 0});
    }
    b.implication_flag("cone.special_isotropic_minus_theta_I4_or_theta_K4_implies_cayley_Phi2",
                       b.f("special_isotropic_minus_theta_I4") || b.f("special_isotropic_theta_K4"), "cayley_Phi2");
    const bool prem = b.f("complex_isotropic_I1");
    const double vol = b.v("kahler_volume_I1");
    b.implication("cone.complex_isotropic_I1_implies_special_isotropic_and_cayley", prem,
                  {prem ? std::abs(b.v("theta_J4") + vol) : 0, prem ? std::abs(b.v("theta_K4") - vol) : 0,
                   prem ? std::abs(b.v("Phi2") - vol) : 0});
  }
}

void link_checks(Builder& b) {
  const auto& r = b.r;
  const int n = r.n, k = r.degree;
  if (k == 3) {
    for (int p : {1, 3}) {
      const std::string P = std::to_string(p);
      const bool prem = b.f("cr_I" + P);
      b.implication("link.cr_I" + P + "_implies_associative_phi2", prem,
                    {prem ? std::abs(b.v("phi2") - b.v("cr_volume" + P)) : 0});
    }
    b.implication_flag("link.special_isotropic_minus_theta_I3_or_theta_K3_implies_associative_phi2",
                       b.f("special_isotropic_minus_theta_I3") || b.f("special_isotropic_theta_K3"),
                       "associative_phi2");
    const bool prem = b.f("cr_isotropic_I1");
    const double vol = b.v("cr_volume1");
    b.implication("link.cr_isotropic_I1_implies_special_isotropic_and_associative", prem,
                  {prem ? std::abs(b.v("theta_J3") + vol) : 0, prem ? std::abs(b.v("theta_K3") - vol) : 0,
                   prem ? std::abs(b.v("phi2") - vol) : 0});
    const bool lhs = b.f("associative_phi2") && b.f("p_horizontal1");
    const bool rhs = b.f("special_isotropic_minus_theta_I3");
    b.equivalence("link.associative_phi2_p1_horizontal_iff_special_isotropic_minus_theta_I3", lhs, rhs,
                  std::abs(1 + b.v("theta_I3")));
  }
  if (k == 2 * n + 1) {
    b.implication_flag("link.legendrian_alpha2_alpha3_implies_cr_I1",
                       b.f("legendrian_alpha2") && b.f("legendrian_alpha3"), "cr_I1");
    const bool prem = b.f("cr_legendrian_I1");
    double res2 = 0, res3 = 0;
    if (prem) {
      const double vol = b.v("cr_volume1");
      res2 = std::abs(rotated_real(r.phase("psi2"), n + 1) - vol);
      res3 = std::abs(r.phase("psi3").re - vol);
    }
    b.implication("link.cr_legendrian_I1_implies_psi2_phase", prem, {res2});
    b.implication("link.cr_legendrian_I1_implies_psi3_phase", prem, {res3});
  }
}

void twistor_checks(Builder& b) {
  const auto& r = b.r;
  const int n = r.n, k = r.degree;
  const bool hv = b.f("hv_compatible");
  const bool ke = b.f("isotropic_omega_KE"), nk = b.f("isotropic_omega_NK");
  {
    EquivalenceCheck c{"twistor.hv_compatible_implies_ke_iff_nk_isotropic", hv, true, 0};
    if (hv) {
      c.holds = ke == nk;
      // Restriction of the other form when one of them vanishes.
      c.witness = ke ? b.v("restriction_omega_NK") : nk ? b.v("restriction_omega_KE") : 0;
    }
    b.out.push_back(c);
  }
  if (k == 2 * n + 1) {
    const bool prem = b.f("lagrangian_omega_KE") && b.f("lagrangian_omega_NK");
    EquivalenceCheck c{"twistor.lagrangian_ke_nk_implies_hv_split", prem, true, 0};
    if (prem) {
      c.holds = hv && b.v("dim_T_cap_H") == 2 * n && b.v("dim_T_cap_V") == 1;
      c.witness = r.witness("hv_compatible");
    }
    b.out.push_back(c);
  }
  if (k == 3) {
    const bool prem = b.f("calibrated_re_gamma0");
    EquivalenceCheck c{"twistor.re_gamma0_calibrated_implies_hv_iff_ke_isotropic", prem, true, 0};
    if (prem) {
      c.holds = hv == ke && (!hv || (b.v("dim_T_cap_H") == 2 && b.v("dim_T_cap_V") == 1));
      c.witness = b.v("restriction_omega_KE");
    }
    b.out.push_back(c);
  }
}

}  // namespace

std::vector<EquivalenceCheck> equivalences_from_report(const ClassificationReport& r) {
  Builder b{r, {}};
  switch (r.space) {
    case Space::cone: cone_checks(b); break;
    case Space::link: link_checks(b); break;
    case Space::twistor: twistor_checks(b); break;
  }
  return b.out;
}

}  // namespace caliber
