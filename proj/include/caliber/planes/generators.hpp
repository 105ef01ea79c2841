#pragma once

#include <random>
#include <vector>

#include "caliber/calib/plane.hpp"
#include "caliber/model/link_frame.hpp"
#include "caliber/model/twistor.hpp"

namespace caliber {

Vector gaussian_vector(std::mt19937_64& rng, int dim);
Plane random_plane(std::mt19937_64& rng, int dim, int k);

// Gaussian vector projected onto the orthogonal complement of the columns of B
// (any spanning set) and normalized.
Vector random_unit_orthogonal_to(std::mt19937_64& rng, const Matrix& B, int dim);

// span(v1, J v1, ..., vm, J vm) with each v orthogonal to `avoid`, J applied to the earlier
// vectors, and the images of the earlier vectors under every matrix in `avoid_images`.
// The frame order gives the complex orientation of J.
Plane random_complex_plane(std::mt19937_64& rng, const Matrix& J, int m, const std::vector<Matrix>& avoid_images = {},
                           const Matrix& avoid = Matrix());

// I_p-complex planes of complex dimension m on the cone.
Plane random_cone_complex(std::mt19937_64& rng, const HKModel& hk, int p, int m);
// I_p-complex and omega_q-isotropic: new vectors avoid I_q and I_q I_p of the earlier ones.
Plane random_cone_complex_isotropic(std::mt19937_64& rng, const HKModel& hk, int p, int m);

// span(A_p, u1, J_p u1, ...) with the u orthogonal to A_p in the link tangent space.
Plane random_link_cr(std::mt19937_64& rng, const LinkFrame& L, int p, int m);
// Also alpha_q, alpha_r and Omega_q isotropic: u horizontal, avoiding J_q u and J_q J_p u.
Plane random_link_cr_isotropic(std::mt19937_64& rng, const LinkFrame& L, int p, int m);

// E_H + E_V with dim E_H = mh, dim E_V = mv; E_H is omega_H-isotropic when requested.
Plane random_hv_plane(std::mt19937_64& rng, const TwistorModel& T, int mh, int mv, bool isotropic_horizontal);

struct IsotropicSearch {
  Plane plane;
  double residual = 0;  // largest |omega(v_i, v_j)| over the given forms
  int attempts = 0;
};

// k-plane on which every 2-form in `forms` vanishes, found by Riemannian descent on
// sum |omega|_E|^2 from Gaussian starts, restarting until the residual is below tol.
IsotropicSearch random_isotropic_plane(std::mt19937_64& rng, const std::vector<AltForm>& forms, int k,
                                       double tol = 1e-12, int max_attempts = 50);

// Random orthogonal recombination of the frame inside the plane, preserving orientation.
Plane reframe(std::mt19937_64& rng, const Plane& P);

}  // namespace caliber
