#pragma once

#include "caliber/exterior/alt_form.hpp"

namespace caliber {

// Oriented k-plane held as an orthonormal N x k frame; orientation is column order.
class Plane {
 public:
  Plane() = default;
  // Orthonormalizes the columns by modified Gram-Schmidt, keeping orientation.
  static Plane from_frame(const Matrix& frame, double rank_tol = 1e-10);
  static Plane from_vectors(const std::vector<Vector>& vs, double rank_tol = 1e-10);
  // {"dim": N, "frame": [[...], ...]} with one row per vector.
  static Plane from_json(const nlohmann::json& j);

  int dim() const { return static_cast<int>(frame_.rows()); }
  int degree() const { return static_cast<int>(frame_.cols()); }
  const Matrix& frame() const { return frame_; }
  Vector vector(int i) const { return frame_.col(i); }
  // Orthogonal projector onto the plane.
  Matrix projector() const { return frame_ * frame_.transpose(); }
  Plane transformed(const Matrix& g) const { return from_frame(g * frame_); }

  nlohmann::json to_json() const;

 private:
  explicit Plane(Matrix f) : frame_(std::move(f)) {}
  Matrix frame_;
};

double evaluate(const AltForm& a, const Plane& P);
cplx evaluate(const CAltForm& a, const Plane& P);

// Modified Gram-Schmidt; throws InvalidArgument on rank deficiency.
Matrix orthonormalize(const Matrix& frame, double rank_tol = 1e-10);

}  // namespace caliber
