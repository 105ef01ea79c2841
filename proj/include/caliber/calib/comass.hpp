#pragma once

#include <cstdint>
#include <vector>

#include "caliber/calib/plane.hpp"

namespace caliber {

struct ComassParams {
  int restarts = 200;
  std::uint64_t seed = 0;
  int max_iters = 500;
  double tol = 1e-10;
  // Restarts within this distance of the best value count as maximizers.
  double maximizer_tol = 1e-6;
  // Values within this distance are ties, broken by the canonical frame order.
  double tie_tol = 1e-9;
};

struct ComassResult {
  double value = 0;
  Plane argmax;
  int restarts_used = 0;
  double converged_fraction = 0;
  // Distinct planes reaching value within maximizer_tol, best first.
  std::vector<Plane> maximizers;
  std::vector<double> restart_values;
};

// Single ascent from a given frame; returns the final plane, its value and gradient norm.
struct AscentResult {
  Plane plane;
  double value = 0;
  double gradient_norm = 0;
  int iterations = 0;
  bool converged = false;
};
AscentResult stiefel_ascent(const AltForm& f, const Matrix& start, int max_iters, double tol);

// Multi-start lower bound on the comass of f over oriented orthonormal k-planes.
ComassResult comass_search(const AltForm& f, int k, const ComassParams& params = {});

// Comass for the metric with Gram matrix G (positive definite), via the pullback along G^{-1/2}.
// Maximizers are reported in the coordinates w = G^{1/2} u, where they are Euclidean orthonormal.
ComassResult comass_search_metric(const AltForm& f, const Matrix& G, const ComassParams& params = {});

// Exact comass of a 2-form: the spectral norm of its skew coefficient matrix.
double comass_2form_exact(const AltForm& f);

// Euclidean gradient (N x k) of P -> f(P) at the frame V.
Matrix multilinear_gradient(const AltForm& f, const Matrix& V);

// Total order on planes used for tie-breaking (compares orthogonal projectors entrywise).
bool canonical_less(const Plane& a, const Plane& b);
double plane_distance(const Plane& a, const Plane& b);

}  // namespace caliber
