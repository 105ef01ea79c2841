#include "caliber/planes/classify.hpp"

#include <algorithm>
#include <cmath>

#include "caliber/calib/semicalibration.hpp"

namespace caliber {

namespace {

int next(int p) { return p % 3 + 1; }
int after_next(int p) { return (p + 1) % 3 + 1; }

std::string idx(const std::string& stem, int p) { return stem + std::to_string(p); }
std::string theta_name(int p, int k) { return std::string("theta_") + structure_letter(p) + std::to_string(k); }

double largest_singular_value(const Matrix& M) {
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(M);
  return svd.singularValues()(0);
}

void check_plane_dim(const Plane& P, int dim, int k) {
  if (P.dim() != dim) throw DimensionMismatch("plane does not live in the model's tangent space");
  if (P.degree() != k) throw DimensionMismatch("classifier was built for a different plane degree");
}

ClassificationReport start_report(Space s, int n, const Plane& P, double tol, const std::string& id) {
  ClassificationReport r;
  r.plane_id = id;
  r.space = s;
  r.n = n;
  r.degree = P.degree();
  r.tol = tol;
  return r;
}

void add_special_isotropic(ClassificationReport& r, const std::string& name, double v) {
  const double tol = r.tol;
  r.add_value(name, v);
  r.add_flag("special_isotropic_" + name, v >= 1 - tol, std::abs(1 - v));
  r.add_flag("special_isotropic_minus_" + name, v <= -1 + tol, std::abs(1 + v));
}

}  // namespace

char structure_letter(int p) { return "IJK"[p - 1]; }

double invariance_residual(const Matrix& J, const Plane& P) {
  const Matrix& U = P.frame();
  return largest_singular_value(J * U - U * (U.transpose() * J * U));
}

int numeric_rank(const Matrix& M, double tol) {
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(M);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) r += svd.singularValues()(i) > tol;
  return r;
}

ConeClassifier::ConeClassifier(const HKModel& hk, int degree) : hk_(hk), k_(degree) {
  const int n = hk.n();
  if (degree < 1 || degree > hk.dim()) throw InvalidArgument("plane degree out of range");
  for (int p = 1; p <= 3; ++p) {
    if (k_ % 2 == 0) real_[idx("omega_power", p)] = hk.omega_power(p, k_ / 2);
    if (k_ == 2 * n + 2) complex_[idx("upsilon", p)] = hk.upsilon(p);
    if (k_ % 2 == 0 && k_ <= 2 * n + 2) real_[theta_name(p, k_)] = hk.theta(p, k_);
    if (k_ == 4) real_[idx("Phi", p)] = hk.cayley(p);
  }
  if (k_ == 4) real_["lambda"] = hk.lambda();
}

ClassificationReport ConeClassifier::classify(const Plane& P, double tol, const std::string& id) const {
  const int n = hk_.n();
  check_plane_dim(P, hk_.dim(), k_);
  ClassificationReport r = start_report(Space::cone, n, P, tol, id);
  double cres[3], iso[3];
  for (int p = 1; p <= 3; ++p) {
    cres[p - 1] = invariance_residual(hk_.I(p), P);
    iso[p - 1] = max_restriction(hk_.omega(p), P);
  }
  for (int p = 1; p <= 3; ++p) {
    const bool cx = cres[p - 1] <= tol;
    r.add_flag(idx("complex_I", p), cx, cres[p - 1]);
    if (k_ % 2 == 0) {
      const double vol = evaluate(real_.at(idx("omega_power", p)), P);
      r.add_value(idx("kahler_volume_I", p), vol);
      r.add_flag(idx("anti_complex_I", p), cx && vol < 0, cres[p - 1]);
    }
    r.add_flag(idx("isotropic_omega", p), iso[p - 1] <= tol, iso[p - 1]);
    r.add_flag(idx("lagrangian_omega", p), iso[p - 1] <= tol && k_ == 2 * n + 2, iso[p - 1]);
    const double ci = std::max({cres[p - 1], iso[next(p) - 1], iso[after_next(p) - 1]});
    r.add_flag(idx("complex_isotropic_I", p), ci <= tol, ci);
    r.add_flag(idx("complex_lagrangian_I", p), ci <= tol && k_ == 2 * n + 2, ci);
  }
  for (const auto& [name, f] : complex_) {
    const cplx u = evaluate(f, P);
    r.add_phase(name, u.real(), u.imag());
    r.add_flag("special_lagrangian_" + name, std::abs(u) >= 1 - tol, std::abs(1 - std::abs(u)));
  }
  for (int p = 1; p <= 3; ++p) {
    auto it = real_.find(theta_name(p, k_));
    if (it != real_.end()) add_special_isotropic(r, it->first, evaluate(it->second, P));
  }
  if (k_ == 4) {
    for (int p = 1; p <= 3; ++p) {
      const double v = evaluate(real_.at(idx("Phi", p)), P);
      r.add_value(idx("Phi", p), v);
      r.add_flag(idx("cayley_Phi", p), v >= 1 - tol, std::abs(1 - v));
    }
    r.add_value("lambda", evaluate(real_.at("lambda"), P));
  }
  return r;
}

LinkClassifier::LinkClassifier(const LinkFrame& L, int degree) : L_(L), k_(degree) {
  const int n = L.n();
  if (degree < 1 || degree > L.dim()) throw InvalidArgument("plane degree out of range");
  for (int p = 1; p <= 3; ++p) {
    if (k_ % 2 == 1) real_[idx("cr_volume", p)] = L.cr_form(p, (k_ - 1) / 2);
    if (k_ == 2 * n + 1) complex_[idx("psi", p)] = L.psi(p);
    if (k_ % 2 == 1 && k_ <= 2 * n + 1) real_[theta_name(p, k_)] = L.theta(p, k_);
    if (k_ == 3) {
      real_[idx("phi", p)] = L.phi(p);
      complex_[idx("Gamma", p)] = L.gamma(p);
    }
    if (k_ == 2) real_[idx("omega_tilde", p)] = L.omega_tilde(p);
    if (k_ == 4) real_[idx("xi", p)] = L.xi(p);
  }
}

ClassificationReport LinkClassifier::classify(const Plane& P, double tol, const std::string& id) const {
  const int n = L_.n();
  check_plane_dim(P, L_.dim(), k_);
  ClassificationReport r = start_report(Space::link, n, P, tol, id);
  const Matrix& U = P.frame();
  double along[3], iso[3];
  for (int p = 1; p <= 3; ++p) {
    along[p - 1] = U.row(p - 1).cwiseAbs().maxCoeff();
    iso[p - 1] = std::max(along[p - 1], max_restriction(L_.Omega(p), P));
  }
  for (int p = 1; p <= 3; ++p) {
    const Vector a = Vector::Unit(L_.dim(), p - 1);
    const double off = (a - U * (U.transpose() * a)).norm();
    const double cr = std::max(off, invariance_residual(L_.J(p), P));
    r.add_flag(idx("cr_I", p), cr <= tol, cr);
    r.add_flag(idx("alpha_isotropic", p), iso[p - 1] <= tol, iso[p - 1]);
    r.add_flag(idx("legendrian_alpha", p), iso[p - 1] <= tol && k_ == 2 * n + 1, iso[p - 1]);
    r.add_flag(idx("p_horizontal", p), along[p - 1] <= tol, along[p - 1]);
    const double ci = std::max({cr, iso[next(p) - 1], iso[after_next(p) - 1]});
    r.add_flag(idx("cr_isotropic_I", p), ci <= tol, ci);
    r.add_flag(idx("cr_legendrian_I", p), ci <= tol && k_ == 2 * n + 1, ci);
    auto it = real_.find(idx("cr_volume", p));
    if (it != real_.end()) r.add_value(it->first, evaluate(it->second, P));
  }
  const double vert = U.topRows(3).norm();
  r.add_flag("horizontal", vert <= tol, vert);
  for (const auto& [name, f] : complex_) {
    const cplx u = evaluate(f, P);
    r.add_phase(name, u.real(), u.imag());
    if (name.rfind("psi", 0) == 0)
      r.add_flag("special_legendrian_" + name, std::abs(u) >= 1 - tol, std::abs(1 - std::abs(u)));
    else
      r.add_value("re_" + name, u.real());
  }
  for (int p = 1; p <= 3; ++p) {
    auto it = real_.find(theta_name(p, k_));
    if (it != real_.end()) add_special_isotropic(r, it->first, evaluate(it->second, P));
    if (k_ == 3) {
      const double v = evaluate(real_.at(idx("phi", p)), P);
      r.add_value(idx("phi", p), v);
      r.add_flag(idx("associative_phi", p), v >= 1 - tol, std::abs(1 - v));
    }
    for (const char* stem : {"omega_tilde", "xi"}) {
      auto jt = real_.find(idx(stem, p));
      if (jt != real_.end()) r.add_value(jt->first, evaluate(jt->second, P));
    }
  }
  return r;
}

TwistorClassifier::TwistorClassifier(const TwistorModel& T, int degree) : T_(T), k_(degree) {
  if (degree < 1 || degree > T.dim()) throw InvalidArgument("plane degree out of range");
  if (k_ == 3) {
    real_["re_gamma0"] = T.gamma0().re;
    real_["im_gamma0"] = T.gamma0().im;
  }
  if (k_ == 4) real_["xi"] = T.xi();
}

ClassificationReport TwistorClassifier::classify(const Plane& P, double tol, const std::string& id) const {
  const int n = T_.n();
  check_plane_dim(P, T_.dim(), k_);
  ClassificationReport r = start_report(Space::twistor, n, P, tol, id);
  const Matrix& U = P.frame();
  const Matrix PH = T_.horizontal_projector(), PV = T_.vertical_projector();
  const int dim_h = k_ - numeric_rank(PV * U, tol);
  const int dim_v = k_ - numeric_rank(PH * U, tol);
  const Matrix Pr = P.projector();
  const double commutator = largest_singular_value(Pr * PH - PH * Pr);
  r.add_value("dim_T_cap_H", dim_h);
  r.add_value("dim_T_cap_V", dim_v);
  r.add_flag("hv_compatible", commutator <= tol && dim_h + dim_v == k_, commutator);
  const double vpart = (PV * U).norm(), hpart = (PH * U).norm();
  r.add_flag("horizontal", vpart <= tol, vpart);
  r.add_flag("vertical", hpart <= tol, hpart);

  const std::pair<const char*, const AltForm*> twos[] = {
      {"omega_KE", &T_.omega_KE()}, {"omega_NK", &T_.omega_NK()}, {"omega_H", &T_.omega_H()}, {"omega_V", &T_.omega_V()}};
  for (const auto& [name, w] : twos) {
    const double m = max_restriction(*w, P);
    r.add_value(std::string("restriction_") + name, m);
    r.add_flag(std::string("isotropic_") + name, m <= tol, m);
    r.add_flag(std::string("lagrangian_") + name, m <= tol && k_ == 2 * n + 1, m);
  }
  const double cp = invariance_residual(T_.J_plus(), P), cm = invariance_residual(T_.J_minus(), P);
  r.add_flag("complex_J_plus", cp <= tol, cp);
  r.add_flag("complex_J_minus", cm <= tol, cm);
  if (k_ == 3) {
    const double re = evaluate(real_.at("re_gamma0"), P), im = evaluate(real_.at("im_gamma0"), P);
    r.add_value("re_gamma0", re);
    r.add_phase("gamma0", re, im);
    r.add_flag("calibrated_re_gamma0", re >= 1 - tol, std::abs(1 - re));
  }
  if (k_ == 4) r.add_value("xi", evaluate(real_.at("xi"), P));
  return r;
}

ClassificationReport classify_plane(const Plane& P, const HKModel& hk, double tol, const std::string& id) {
  if (P.dim() != hk.dim()) throw DimensionMismatch("plane does not live in the cone");
  return ConeClassifier(hk, P.degree()).classify(P, tol, id);
}

ClassificationReport classify_plane(const Plane& P, const LinkFrame& L, double tol, const std::string& id) {
  if (P.dim() != L.dim()) throw DimensionMismatch("plane does not live in the link tangent space");
  return LinkClassifier(L, P.degree()).classify(P, tol, id);
}

ClassificationReport classify_plane(const Plane& P, const TwistorModel& T, double tol, const std::string& id) {
  if (P.dim() != T.dim()) throw DimensionMismatch("plane does not live in the twistor tangent space");
  return TwistorClassifier(T, P.degree()).classify(P, tol, id);
}

std::vector<EquivalenceCheck> check_equivalences(const Plane& P, const HKModel& hk, double tol) {
  return equivalences_from_report(classify_plane(P, hk, tol));
}

std::vector<EquivalenceCheck> check_equivalences(const Plane& P, const LinkFrame& L, double tol) {
  return equivalences_from_report(classify_plane(P, L, tol));
}

std::vector<EquivalenceCheck> check_equivalences(const Plane& P, const TwistorModel& T, double tol) {
  return equivalences_from_report(classify_plane(P, T, tol));
}

}  // namespace caliber
