#include "caliber/symforms/identities.hpp"

#include <functional>

#include "caliber/symforms/conical_catalog.hpp"

namespace caliber {

namespace {

int nx(int p) { return p % 3 + 1; }
int nn(int p) { return (p + 1) % 3 + 1; }

IdentityResult residual(std::string name, std::string statement, const RationalForm& r) {
  return {std::move(name), std::move(statement), term_count(r), describe_leading_term(r)};
}

IdentityResult residual(std::string name, std::string statement, const CRationalForm& r) {
  IdentityResult out{std::move(name), std::move(statement), term_count(r), describe_leading_term(r.re)};
  if (r.re.is_zero()) out.leading = describe_leading_term(r.im);
  return out;
}

std::string idx(int p) { return std::to_string(p); }

}  // namespace

std::vector<IdentityResult> structure_identities(int n) {
  ConicalCatalog c(n);
  std::vector<IdentityResult> out;
  for (int p = 1; p <= 3; ++p) {
    const int q = nx(p), r = nn(p);
    out.push_back(residual("d_alpha" + idx(p), "d alpha" + idx(p) + " = 2 Omega" + idx(p),
                           ext_d(c.alpha(p)) - scaled(2, c.Omega(p))));
    out.push_back(residual("d_Omega" + idx(p), "d Omega" + idx(p) + " = 0", ext_d(c.Omega(p))));
    RationalForm dk = ext_d(c.kappa(p));
    out.push_back(residual("d_kappa" + idx(p), "d kappa" + idx(p) + " = 2(alpha" + idx(q) + "^kappa" + idx(r) +
                                                   " - alpha" + idx(r) + "^kappa" + idx(q) + ")",
                           dk - scaled(2, wedge(c.alpha(q), c.kappa(r)) - wedge(c.alpha(r), c.kappa(q)))));
    out.push_back(residual("d_kappa" + idx(p) + "_via_Omega",
                           "d kappa" + idx(p) + " = 2(alpha" + idx(q) + "^Omega" + idx(r) + " - alpha" + idx(r) +
                               "^Omega" + idx(q) + ")",
                           dk - scaled(2, wedge(c.alpha(q), c.Omega(r)) - wedge(c.alpha(r), c.Omega(q)))));
    // (2/n!)(Omega_q + i Omega_r)^{n+1} = 2(n+1) * [(Omega_q + i Omega_r)^{n+1} / (n+1)!]
    out.push_back(residual("d_psi" + idx(p),
                           "d Psi" + idx(p) + " = (2/n!)(Omega" + idx(q) + " + i Omega" + idx(r) + ")^(n+1)",
                           ext_d(c.psi(p)) - scaled(2 * (n + 1), c.sigma_link_power(p, n + 1))));
    CRationalForm g = c.gamma(p);
    RationalForm dre = ext_d(g.re);
    out.push_back(residual("d_im_gamma" + idx(p), "d Im Gamma" + idx(p) + " = 0", ext_d(g.im)));
    out.push_back(residual("d_re_gamma" + idx(p),
                           "d Re Gamma" + idx(p) + " = 2 Xi" + idx(p) + " - 4 alpha" + idx(q) + "^alpha" + idx(r) +
                               "^kappa" + idx(p),
                           dre - scaled(2, c.xi(p)) +
                               scaled(4, wedge(wedge(c.alpha(q), c.alpha(r)), c.kappa(p)))));
    out.push_back(residual("d_xi" + idx(p), "d Xi" + idx(p) + " = -4 kappa" + idx(p) + "^Im Gamma" + idx(p),
                           ext_d(c.xi(p)) + scaled(4, wedge(c.kappa(p), g.im))));
    RationalForm wt = c.omega_tilde(p);
    out.push_back(residual("d_omega_tilde" + idx(p),
                           "d OmegaTilde" + idx(p) + " = 3 Im(2 Gamma" + idx(p) + ")",
                           ext_d(wt) - scaled(6, g.im)));
    if (n == 1)
      out.push_back(residual("d_re_2gamma" + idx(p) + "_n1",
                             "d Re(2 Gamma" + idx(p) + ") = 2 OmegaTilde" + idx(p) + "^2",
                             scaled(2, dre) - scaled(2, wedge(wt, wt))));
  }
  RationalForm quartic = wedge(c.kappa(1), c.kappa(1)) + wedge(c.kappa(2), c.kappa(2)) + wedge(c.kappa(3), c.kappa(3));
  RationalForm pot = c.alpha123();
  for (int p = 1; p <= 3; ++p) pot += wedge(c.alpha(p), c.kappa(p));
  out.push_back(residual("exact_kappa_quartic",
                         "kappa1^2 + kappa2^2 + kappa3^2 = (1/2) d(alpha123 + sum alpha_p^kappa_p)",
                         quartic - scaled(mpq_class(1, 2), ext_d(pot))));
  return out;
}

std::vector<DescentResult> descent_checks(int n) {
  ConicalCatalog c(n);
  const PolyVectorField& A = c.reeb(1);
  std::vector<DescentResult> out;
  auto check = [&](std::string name, const RationalForm& f, bool expected) {
    DescentResult r;
    r.name = std::move(name);
    r.contraction_vanishes = f.degree() == 0 || interior(A, f).is_zero();
    r.derivative_contraction_vanishes = interior(A, ext_d(f)).is_zero();
    r.expected_to_descend = expected;
    out.push_back(std::move(r));
  };
  auto check_c = [&](const std::string& name, const CRationalForm& f, bool expected) {
    DescentResult r;
    r.name = name;
    r.contraction_vanishes = interior(A, f).is_zero();
    r.derivative_contraction_vanishes = interior(A, ext_d(f)).is_zero();
    r.expected_to_descend = expected;
    out.push_back(std::move(r));
  };
  check_c("gamma1", c.gamma(1), true);
  check("xi1", c.xi(1), true);
  check("kappa1", c.kappa(1), true);
  check("Omega1", c.Omega(1), true);
  check("alpha2_alpha3", wedge(c.alpha(2), c.alpha(3)), true);
  check("omega_tilde1", c.omega_tilde(1), true);
  check("kappa2", c.kappa(2), false);
  check("kappa3", c.kappa(3), false);
  check_c("gamma2", c.gamma(2), false);
  check_c("gamma3", c.gamma(3), false);
  for (int p = 1; p <= 3; ++p) {
    check("alpha" + idx(p), c.alpha(p), false);
    check("phi" + idx(p), c.phi(p), false);
    check_c("psi" + idx(p), c.psi(p), false);
  }
  check("Omega2", c.Omega(2), false);
  check("Omega3", c.Omega(3), false);
  return out;
}

std::vector<IdentityResult> cone_reconstructions(int n) {
  ConicalCatalog c(n);
  std::vector<IdentityResult> out;
  const RationalForm dr = radial_one_form(c.dim());
  auto run = [&](const std::string& name, const RationalForm& f, int k, const RationalForm& a, const RationalForm& b) {
    // f = r^{k-1} dr ^ a + r^k b, and d((r^k/k) a) = f with potential exactly (r^k/k) a.
    ConeSplit s = cone_split(f);
    out.push_back(residual(name + "_split_radial", name + " radial part equals r^(k-1) times the link form",
                           s.alpha - times_r_power(a, k - 1)));
    out.push_back(residual(name + "_split_horizontal", name + " horizontal part equals r^k times the link form",
                           s.beta - times_r_power(b, k)));
    RationalForm pot = homogeneous_potential(f, k);
    out.push_back(residual(name + "_potential", name + " potential equals (r^k/k) times the radial link form",
                           pot - scaled(mpq_class(1, k), times_r_power(a, k))));
    out.push_back(residual(name + "_potential_closes", "d of the potential of " + name + " recovers it",
                           ext_d(pot) - f));
  };
  for (int p = 1; p <= 3; ++p) run("omega" + idx(p), c.omega(p), 2, c.alpha(p), c.Omega(p));
  {
    // Phi_1 = r^3 dr ^ phi_1 + r^4 (1/2)(-Omega1^2 + Omega2^2 + Omega3^2)
    RationalForm b = scaled(mpq_class(1, 2), wedge(c.Omega(2), c.Omega(2)) + wedge(c.Omega(3), c.Omega(3)) -
                                                 wedge(c.Omega(1), c.Omega(1)));
    run("cayley1", c.cayley(1), 4, c.phi(1), b);
  }
  {
    RationalForm a(c.dim(), 3), b(c.dim(), 4);
    for (int p = 1; p <= 3; ++p) {
      a += wedge(c.alpha(p), c.Omega(p));
      b += wedge(c.Omega(p), c.Omega(p));
    }
    run("lambda", c.lambda(), 4, scaled(mpq_class(1, 3), a), scaled(mpq_class(1, 6), b));
  }
  {
    CRationalForm u = c.upsilon(1);
    CRationalForm psi = c.psi(1);
    CRationalForm top = c.sigma_link_power(1, n + 1);
    run("re_upsilon1", u.re, 2 * n + 2, psi.re, top.re);
    run("im_upsilon1", u.im, 2 * n + 2, psi.im, top.im);
  }
  return out;
}

}  // namespace caliber
