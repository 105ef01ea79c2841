#include "caliber/symforms/conical_catalog.hpp"

#include "caliber/model/cone_forms.hpp"

namespace caliber {

namespace {

int next(int p) { return p % 3 + 1; }
int after_next(int p) { return (p + 1) % 3 + 1; }

mpq_class inv_factorial(int k) { return mpq_class(1) / factorial_as<mpq_class>(k); }

RationalForm scalar_one(int dim) { return RationalForm::scalar(dim, RCoefficient::r_power(0, dim)); }

}  // namespace

ConicalCatalog::ConicalCatalog(int n) : n_(n), dim_(4 * n + 4) {
  if (n < 1 || n > 2) throw InvalidArgument("exact cone calculus supports n = 1 or 2");
  R_ = dilation_field(dim_);
  const RationalForm rdr = euler_one_form(dim_);
  const auto cf = ConeForms<mpq_class>::build(n);
  for (int p = 1; p <= 3; ++p) {
    omega_[p - 1] = lift(cf.omega[p - 1]);
    alpha_[p - 1] = times_r_power(interior(R_, omega_[p - 1]), -2);
    Omega_[p - 1] = times_r_power(omega_[p - 1] - wedge(rdr, alpha_[p - 1]), -2);
  }
  for (int p = 1; p <= 3; ++p)
    kappa_[p - 1] = Omega_[p - 1] - wedge(alpha_[next(p) - 1], alpha_[after_next(p) - 1]);
  for (int p = 1; p <= 3; ++p) {
    // Components of I_p x: (I_p x)_b = sum_a omega_p(e_a, e_b) x_a.
    std::vector<std::vector<int>> M(dim_, std::vector<int>(dim_, 0));
    for (const auto& [m, c] : cf.omega[p - 1].terms()) {
      auto idx = blade::indices(m);
      const int s = static_cast<int>(c.get_num().get_si());
      M[idx[1]][idx[0]] += s;
      M[idx[0]][idx[1]] -= s;
    }
    reeb_[p - 1] = linear_field(M, -1);
  }
}

RationalForm ConicalCatalog::alpha123() const { return wedge(wedge(alpha(1), alpha(2)), alpha(3)); }

CRationalForm ConicalCatalog::sigma_link_power(int p, int m) const {
  CRationalForm s(Omega(next(p)), Omega(after_next(p)));
  CRationalForm acc = CRationalForm::real(scalar_one(dim_));
  for (int i = 0; i < m; ++i) acc = wedge(acc, s);
  return scaled(inv_factorial(m), acc);
}

CRationalForm ConicalCatalog::psi(int p) const {
  CRationalForm a(alpha(next(p)), alpha(after_next(p)));
  return wedge(a, sigma_link_power(p, n_));
}

CRationalForm ConicalCatalog::gamma(int p) const {
  CRationalForm a(alpha(next(p)), -alpha(after_next(p)));
  CRationalForm k(kappa(next(p)), kappa(after_next(p)));
  return wedge(a, k);
}

RationalForm ConicalCatalog::xi(int p) const {
  const RationalForm& a = kappa(next(p));
  const RationalForm& b = kappa(after_next(p));
  return wedge(a, a) + wedge(b, b);
}

RationalForm ConicalCatalog::phi(int p) const {
  RationalForm acc = alpha123();
  for (int q = 1; q <= 3; ++q) {
    RationalForm t = wedge(alpha(q), kappa(q));
    acc = q == p ? acc - t : acc + t;
  }
  return acc;
}

RationalForm ConicalCatalog::omega_tilde(int p) const {
  return scaled(2, kappa(p)) - wedge(alpha(next(p)), alpha(after_next(p)));
}

RationalForm ConicalCatalog::cr_form(int p, int k) const {
  RationalForm acc = scalar_one(dim_);
  for (int i = 0; i < k; ++i) acc = wedge(acc, Omega(p));
  return scaled(inv_factorial(k), wedge(alpha(p), acc));
}

RationalForm ConicalCatalog::omega_power(int p, int k) const {
  return lift(ConeForms<mpq_class>::build(n_).omega_power(p, k));
}

CRationalForm ConicalCatalog::upsilon(int p) const {
  auto u = ConeForms<mpq_class>::build(n_).upsilon(p);
  return {lift(u.re), lift(u.im)};
}

RationalForm ConicalCatalog::theta(int p, int k2) const { return lift(ConeForms<mpq_class>::build(n_).theta(p, k2)); }

RationalForm ConicalCatalog::cayley(int p) const { return lift(ConeForms<mpq_class>::build(n_).cayley(p)); }

RationalForm ConicalCatalog::lambda() const { return lift(ConeForms<mpq_class>::build(n_).lambda()); }

RationalForm ConicalCatalog::link_theta(int p, int k2) const {
  return times_r_power(interior(R_, theta(p, k2)), -k2);
}

}  // namespace caliber
