#include "caliber/cli/registry.hpp"

#include <functional>

#include "caliber/errors.hpp"
#include "caliber/model/link_frame.hpp"
#include "caliber/model/twistor.hpp"
#include "caliber/planes/classify.hpp"

namespace caliber {

namespace {

struct Entry {
  std::string name;
  std::string description;
  bool complex;
  std::function<CAltForm()> make;
};

CAltForm real(const AltForm& f) { return CAltForm::real(f); }

std::string S(int i) { return std::to_string(i); }

std::vector<Entry> cone_entries(int n) {
  auto hk = std::make_shared<HKModel>(HKModel::build(n));
  std::vector<Entry> out;
  for (int p = 1; p <= 3; ++p) {
    out.push_back({"omega" + S(p), "Kahler form of I" + S(p), false, [hk, p] { return real(hk->omega(p)); }});
    for (int k = 2; k <= n + 1; ++k)
      out.push_back({"omega" + S(p) + "_pow" + S(k), "omega" + S(p) + "^" + S(k) + "/" + S(k) + "!", false,
                     [hk, p, k] { return real(hk->omega_power(p, k)); }});
  }
  for (int p = 1; p <= 3; ++p) {
    out.push_back({"sigma" + S(p), "holomorphic symplectic form for I" + S(p), true, [hk, p] { return hk->sigma(p); }});
    for (int k = 2; k <= n + 1; ++k)
      out.push_back({"sigma" + S(p) + "_pow" + S(k), "sigma" + S(p) + "^" + S(k) + "/" + S(k) + "!", true,
                     [hk, p, k] { return hk->sigma_power(p, k); }});
    out.push_back({"upsilon" + S(p), "holomorphic volume form for I" + S(p), true, [hk, p] { return hk->upsilon(p); }});
    out.push_back({"re_upsilon" + S(p), "real part of upsilon" + S(p), false, [hk, p] { return real(hk->upsilon(p).re); }});
    out.push_back({"im_upsilon" + S(p), "imaginary part of upsilon" + S(p), false, [hk, p] { return real(hk->upsilon(p).im); }});
  }
  for (int p = 1; p <= 3; ++p)
    for (int k = 1; k <= n + 1; ++k)
      out.push_back({std::string("theta_") + structure_letter(p) + S(2 * k),
                     std::string("special isotropic form of degree ") + S(2 * k) + " for " + structure_letter(p), false,
                     [hk, p, k] { return real(hk->theta(p, 2 * k)); }});
  for (int p = 1; p <= 3; ++p)
    out.push_back({"Phi" + S(p), "Cayley form singling out I" + S(p), false, [hk, p] { return real(hk->cayley(p)); }});
  out.push_back({"lambda", "sum of the Kahler squares over six", false, [hk] { return real(hk->lambda()); }});
  return out;
}

std::vector<Entry> link_entries(int n) {
  auto L = std::make_shared<LinkFrame>(n);
  std::vector<Entry> out;
  for (int p = 1; p <= 3; ++p) {
    out.push_back({"alpha" + S(p), "contact form dual to A" + S(p), false, [L, p] { return real(L->alpha(p)); }});
    out.push_back({"Omega" + S(p), "transverse Kahler form " + S(p), false, [L, p] { return real(L->Omega(p)); }});
    out.push_back({"kappa" + S(p), "Kahler form of the link metric " + S(p), false, [L, p] { return real(L->kappa(p)); }});
  }
  out.push_back({"alpha123", "alpha1^alpha2^alpha3", false, [L] { return real(L->alpha123()); }});
  for (int p = 1; p <= 3; ++p) {
    out.push_back({"psi" + S(p), "special Legendrian form " + S(p), true, [L, p] { return L->psi(p); }});
    out.push_back({"re_psi" + S(p), "real part of psi" + S(p), false, [L, p] { return real(L->psi(p).re); }});
    out.push_back({"gamma" + S(p), "complex 3-form " + S(p), true, [L, p] { return L->gamma(p); }});
    out.push_back({"re_gamma" + S(p), "real part of gamma" + S(p), false, [L, p] { return real(L->gamma(p).re); }});
    out.push_back({"im_gamma" + S(p), "imaginary part of gamma" + S(p), false, [L, p] { return real(L->gamma(p).im); }});
    out.push_back({"xi" + S(p), "4-form xi" + S(p), false, [L, p] { return real(L->xi(p)); }});
    out.push_back({"phi" + S(p), "associative form singling out A" + S(p), false, [L, p] { return real(L->phi(p)); }});
    out.push_back({"omega_tilde" + S(p), "2-form omega_tilde" + S(p), false, [L, p] { return real(L->omega_tilde(p)); }});
    for (int k = 1; k <= n; ++k)
      out.push_back({"cr" + S(p) + "_deg" + S(2 * k + 1), "alpha" + S(p) + "^Omega" + S(p) + "^" + S(k) + "/" + S(k) + "!",
                     false, [L, p, k] { return real(L->cr_form(p, k)); }});
  }
  for (int p = 1; p <= 3; ++p)
    for (int k = 1; k <= n + 1; ++k)
      out.push_back({std::string("theta_") + structure_letter(p) + S(2 * k - 1),
                     std::string("special isotropic link form of degree ") + S(2 * k - 1) + " for " + structure_letter(p),
                     false, [L, p, k] { return real(L->theta(p, 2 * k - 1)); }});
  return out;
}

std::vector<Entry> twistor_entries(int n) {
  auto T = std::make_shared<TwistorModel>(TwistorModel::build(n));
  std::vector<Entry> out;
  out.push_back({"omega_H", "horizontal Kahler form", false, [T] { return real(T->omega_H()); }});
  out.push_back({"beta2", "horizontal 2-form beta2", false, [T] { return real(T->beta(2)); }});
  out.push_back({"beta3", "horizontal 2-form beta3", false, [T] { return real(T->beta(3)); }});
  out.push_back({"omega_V", "vertical area form", false, [T] { return real(T->omega_V()); }});
  out.push_back({"omega_KE", "Kahler-Einstein form", false, [T] { return real(T->omega_KE()); }});
  out.push_back({"omega_NK", "nearly Kahler 2-form", false, [T] { return real(T->omega_NK()); }});
  out.push_back({"gamma0", "complex 3-form gamma0", true, [T] { return T->gamma0(); }});
  out.push_back({"re_gamma0", "real part of gamma0", false, [T] { return real(T->gamma0().re); }});
  out.push_back({"im_gamma0", "imaginary part of gamma0", false, [T] { return real(T->gamma0().im); }});
  out.push_back({"xi", "twistor 4-form xi", false, [T] { return real(T->xi()); }});
  return out;
}

void check_n(int n) {
  if (n < 1 || n > 3) throw InvalidArgument("n must be 1, 2 or 3");
}

std::vector<Entry> entries(Space space, int n) {
  check_n(n);
  switch (space) {
    case Space::cone: return cone_entries(n);
    case Space::link: return link_entries(n);
    default: return twistor_entries(n);
  }
}

}  // namespace

std::optional<Space> parse_space(const std::string& s) {
  for (Space sp : {Space::cone, Space::link, Space::twistor})
    if (s == space_name(sp)) return sp;
  return std::nullopt;
}

std::vector<std::string> form_names(Space space, int n) {
  std::vector<std::string> out;
  for (const auto& e : entries(space, n)) out.push_back(e.name);
  return out;
}

NamedForm resolve_form(const std::string& name, int n, std::optional<Space> space) {
  check_n(n);
  std::vector<Space> order = space ? std::vector<Space>{*space} : std::vector<Space>{Space::cone, Space::link, Space::twistor};
  for (Space sp : order)
    for (const auto& e : entries(sp, n))
      if (e.name == name) return {e.name, sp, n, e.description, e.make(), e.complex};
  throw InvalidArgument("unknown form '" + name + "'");
}

nlohmann::json forms_catalog(Space space, int n) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : entries(space, n)) {
    const CAltForm f = e.make();
    nlohmann::json item = {{"name", e.name},
                           {"degree", f.degree()},
                           {"dim", f.dim()},
                           {"complex", e.complex},
                           {"terms_re", f.re.size()},
                           {"description", e.description}};
    if (e.complex) item["terms_im"] = f.im.size();
    list.push_back(item);
  }
  return {{"space", space_name(space)}, {"n", n}, {"forms", list}};
}

}  // namespace caliber
