#pragma once

#include <optional>
#include <vector>

#include "caliber/calib/comass.hpp"

namespace caliber {

bool is_calibrated(const AltForm& f, const Plane& P, double tol = 1e-9);

// Orthonormal basis (N x (N-1)) of the orthogonal complement of a unit vector.
Matrix orthogonal_complement(const Vector& e);

struct LineReduction {
  AltForm alpha;       // (e ⌟ f) on e^⊥
  AltForm beta;        // (f - e^♭ ^ alpha) on e^⊥
  Matrix complement;   // basis of e^⊥ used for both restrictions
  // Filled when the caller asserts every line lies in a calibrated plane.
  std::optional<double> alpha_comass;
};

// f = e^♭ ^ alpha + beta. `complement` optionally fixes the basis of e^⊥.
LineReduction reduce_along_line(const AltForm& f, const Vector& e, const Matrix* complement = nullptr,
                                bool lines_calibrated = false, const ComassParams& params = {});

struct Transported {
  AltForm form;
  Matrix metric;  // Gram matrix for which `form` is claimed to be a semi-calibration
};

// t^m f for f in Λ^m(H*) ⊗ Λ^{k-m}(V*), where `horizontal` marks the coordinates of H;
// the metric becomes t^2 g_H + g_V.
Transported transport_by_scaling(const AltForm& f, double t, int m, const std::vector<bool>& horizontal);

// p^* f for a linear Riemannian submersion p (rows orthonormal).
Transported transport_by_submersion(const AltForm& f, const Matrix& p);

// True iff every maximizer is orthogonal to e. Requires e ⌟ f = 0.
bool splitting_support(const AltForm& f, const Vector& e, const std::vector<Plane>& maximizers,
                       double tol = 1e-8);

// Degree k such that D_J^2 f = -k^2 f, i.e. f of type (k,0)+(0,k); nullopt otherwise.
std::optional<int> pure_type_degree(const AltForm& f, const Matrix& J, double tol = 1e-9);

struct IsotropyCheck {
  bool holds = false;
  double worst = 0;  // largest |omega(v_i, v_j)| over maximizers
};

// Requires f of type (k,0)+(0,k) for J with k = deg f.
IsotropyCheck isotropy_of_maximizers(const AltForm& f, const Matrix& J, const AltForm& omega,
                                     const std::vector<Plane>& maximizers, double tol = 1e-8);

double max_restriction(const AltForm& omega, const Plane& P);

struct EnvelopeReport {
  // Real dimension of span(P, I1 P, I2 P, I3 P) for each maximizer.
  std::vector<int> envelope_dims;
  int plane_degree = 0;
};
EnvelopeReport explore_envelope(const std::vector<Plane>& maximizers, const Matrix& I1, const Matrix& I2,
                                const Matrix& I3);

}  // namespace caliber
