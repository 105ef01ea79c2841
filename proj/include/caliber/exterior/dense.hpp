#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "caliber/exterior/blade.hpp"

namespace caliber {

inline constexpr int kMaxDenseDim = 20;

// Blade enumeration and contraction tables for dense forms on R^N.
class DenseLayout {
 public:
  struct Entry {
    std::int32_t target;
    std::int16_t index;
    std::int16_t sign;
  };

  static const DenseLayout& get(int dim);

  int dim() const { return dim_; }
  std::size_t count(int degree) const { return masks_[degree].size(); }
  const std::vector<BladeMask>& masks(int degree) const { return masks_[degree]; }
  int rank(BladeMask m) const { return rank_[m]; }
  // Entries of blade r (of the given degree) lie in [offsets[r], offsets[r+1]).
  const std::vector<std::int32_t>& offsets(int degree) const { return offsets_[degree]; }
  const std::vector<Entry>& entries(int degree) const { return entries_[degree]; }

  // out = v ⌟ in, where in has the given degree.
  void contract(const double* v, const std::vector<double>& in, int degree, std::vector<double>& out) const;

 private:
  explicit DenseLayout(int dim);

  int dim_;
  std::vector<std::vector<BladeMask>> masks_;
  std::vector<std::int32_t> rank_;
  std::vector<std::vector<std::int32_t>> offsets_;
  std::vector<std::vector<Entry>> entries_;
};

}  // namespace caliber
