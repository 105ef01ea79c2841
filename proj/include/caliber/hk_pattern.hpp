#pragma once

#include <array>

#include "caliber/exterior/form.hpp"

namespace caliber {

// Per quaternionic block (coordinates 0..3), the standard triple
//   beta1 = e01 + e23, beta2 = e02 - e13, beta3 = e03 + e12.
struct HKPair {
  int a;
  int b;
  int sign;
};

inline const std::array<HKPair, 2>& hk_pairs(int p) {
  static const std::array<std::array<HKPair, 2>, 3> table{{
      {{{0, 1, 1}, {2, 3, 1}}},
      {{{0, 2, 1}, {1, 3, -1}}},
      {{{0, 3, 1}, {1, 2, 1}}},
  }};
  if (p < 1 || p > 3) throw InvalidArgument("structure index must be 1, 2 or 3");
  return table[p - 1];
}

// The p-th standard 2-form on `blocks` quaternionic blocks starting at coordinate `offset` of R^dim.
template <class C>
Form<C> hk_two_form(int p, int dim, int blocks, int offset = 0) {
  std::vector<typename Form<C>::Term> terms;
  for (int j = 0; j < blocks; ++j)
    for (const HKPair& q : hk_pairs(p)) {
      const int base = offset + 4 * j;
      terms.emplace_back((BladeMask{1} << (base + q.a)) | (BladeMask{1} << (base + q.b)), C(q.sign));
    }
  return Form<C>::from_terms(dim, 2, std::move(terms));
}

}  // namespace caliber
