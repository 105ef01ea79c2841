#pragma once

#include <array>

#include "caliber/hk_pattern.hpp"

namespace caliber {

template <class C>
C factorial_as(int k) {
  C f(1);
  for (int i = 2; i <= k; ++i) f = f * C(i);
  return f;
}

// Constant-coefficient forms of the flat hyperkahler structure on R^{4n+4},
// templated on the scalar type so the same construction feeds numeric and exact code.
template <class C>
struct ConeForms {
  int n = 0;
  int dim = 0;
  std::array<Form<C>, 3> omega;
  std::array<ComplexForm<C>, 3> sigma;

  static ConeForms build(int n) {
    ConeForms cf;
    cf.n = n;
    cf.dim = 4 * n + 4;
    for (int p = 1; p <= 3; ++p) cf.omega[p - 1] = hk_two_form<C>(p, cf.dim, n + 1);
    for (int p = 0; p < 3; ++p) cf.sigma[p] = ComplexForm<C>(cf.omega[(p + 1) % 3], cf.omega[(p + 2) % 3]);
    return cf;
  }

  Form<C> one() const { return Form<C>::scalar(dim, C(1)); }
  ComplexForm<C> cone() const { return ComplexForm<C>::real(one()); }

  // omega_p^k / k!
  Form<C> omega_power(int p, int k) const {
    Form<C> f = wedge_power(omega[p - 1], k, one());
    return (C(1) / factorial_as<C>(k)) * f;
  }

  // sigma_p^k / k!
  ComplexForm<C> sigma_power(int p, int k) const {
    ComplexForm<C> f = wedge_power(sigma[p - 1], k, cone());
    return (C(1) / factorial_as<C>(k)) * f;
  }

  ComplexForm<C> upsilon(int p) const { return sigma_power(p, n + 1); }

  // Special isotropic forms: structure 1, 2, 3 stand for I, J, K.
  Form<C> theta(int p, int k2) const {
    if (k2 % 2) throw InvalidArgument("cone theta forms have even degree");
    return sigma_power(p, k2 / 2).re;
  }

  Form<C> cayley(int p) const {
    Form<C> acc(dim, 4);
    for (int q = 1; q <= 3; ++q) {
      Form<C> sq = omega_power(q, 2);
      acc = q == p ? acc - sq : acc + sq;
    }
    return acc;
  }

  Form<C> lambda() const {
    Form<C> acc(dim, 4);
    for (int q = 0; q < 3; ++q) acc += wedge(omega[q], omega[q]);
    return (C(1) / C(6)) * acc;
  }
};

}  // namespace caliber
