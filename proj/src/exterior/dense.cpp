#include "caliber/exterior/dense.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace caliber {

DenseLayout::DenseLayout(int dim) : dim_(dim) {
  masks_.resize(dim + 1);
  offsets_.resize(dim + 1);
  entries_.resize(dim + 1);
  rank_.assign(std::size_t{1} << dim, -1);
  for (int d = 0; d <= dim; ++d) {
    masks_[d] = blade::all_of_degree(dim, d);
    for (std::size_t r = 0; r < masks_[d].size(); ++r) rank_[masks_[d][r]] = static_cast<std::int32_t>(r);
  }
  for (int d = 1; d <= dim; ++d) {
    auto& off = offsets_[d];
    auto& ent = entries_[d];
    off.reserve(masks_[d].size() + 1);
    off.push_back(0);
    for (BladeMask m : masks_[d]) {
      int pos = 0;
      for (BladeMask rest = m; rest; rest &= rest - 1, ++pos) {
        int i = std::countr_zero(rest);
        ent.push_back({rank_[m & ~(BladeMask{1} << i)], static_cast<std::int16_t>(i),
                       static_cast<std::int16_t>((pos & 1) ? -1 : 1)});
      }
      off.push_back(static_cast<std::int32_t>(ent.size()));
    }
  }
}

const DenseLayout& DenseLayout::get(int dim) {
  if (dim < 1 || dim > kMaxDenseDim) throw InvalidArgument("dense layout dimension out of range");
  static std::array<std::unique_ptr<DenseLayout>, kMaxDenseDim + 1> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[dim]) cache[dim].reset(new DenseLayout(dim));
  return *cache[dim];
}

void DenseLayout::contract(const double* v, const std::vector<double>& in, int degree,
                           std::vector<double>& out) const {
  out.assign(masks_[degree - 1].size(), 0.0);
  const auto& off = offsets_[degree];
  const auto& ent = entries_[degree];
  const std::size_t n = masks_[degree].size();
  for (std::size_t r = 0; r < n; ++r) {
    const double c = in[r];
    if (c == 0.0) continue;
    for (std::int32_t e = off[r]; e < off[r + 1]; ++e) {
      const Entry& x = ent[e];
      out[x.target] += x.sign * v[x.index] * c;
    }
  }
}

}  // namespace caliber
