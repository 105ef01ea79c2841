#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "caliber/errors.hpp"

namespace caliber {

// A basis blade e^{i1...ik} with i1 < ... < ik, stored as a bitmask.
using BladeMask = std::uint32_t;

inline constexpr int kMaxFormDim = 32;

namespace blade {

inline int degree(BladeMask m) { return std::popcount(m); }

inline std::vector<int> indices(BladeMask m) {
  std::vector<int> out;
  out.reserve(std::popcount(m));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline BladeMask from_indices(const std::vector<int>& idx, int dim) {
  BladeMask m = 0;
  int prev = -1;
  for (int i : idx) {
    if (i <= prev || i >= dim) throw InvalidArgument("blade indices must be strictly increasing and below dim");
    m |= BladeMask{1} << i;
    prev = i;
  }
  return m;
}

inline BladeMask full(int dim) { return dim >= 32 ? ~BladeMask{0} : (BladeMask{1} << dim) - 1; }

// Sign of e^a ^ e^b relative to the sorted blade e^{a|b}; zero if they overlap.
inline int wedge_sign(BladeMask a, BladeMask b) {
  if (a & b) return 0;
  int swaps = 0;
  while (b) {
    int j = std::countr_zero(b);
    b &= b - 1;
    swaps += std::popcount(a >> j);
  }
  return (swaps & 1) ? -1 : 1;
}

// Sign picked up when contracting the basis vector e_i into e^m (i must lie in m).
inline int interior_sign(BladeMask m, int i) {
  return (std::popcount(m & ((BladeMask{1} << i) - 1)) & 1) ? -1 : 1;
}

// All blades of the given degree in dimension dim, in increasing mask order.
inline std::vector<BladeMask> all_of_degree(int dim, int k) {
  std::vector<BladeMask> out;
  if (k < 0 || k > dim) return out;
  if (k == 0) return {0};
  BladeMask m = (BladeMask{1} << k) - 1;
  const BladeMask limit = dim >= 32 ? 0 : (BladeMask{1} << dim);
  while (true) {
    out.push_back(m);
    BladeMask c = m & (~m + 1);
    BladeMask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
    if (limit != 0 ? m >= limit || m == 0 : m == 0) break;
    if (r == 0) break;
  }
  return out;
}

}  // namespace blade
}  // namespace caliber
