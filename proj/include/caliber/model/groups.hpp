#pragma once

#include <random>
#include <vector>

#include "caliber/model/twistor.hpp"

namespace caliber {

// Random orthogonal matrix commuting with every generator (each an orthogonal
// complex structure; either a single one or a quaternionic triple). Built as the Cayley transform of a projected Gaussian skew matrix.
Matrix random_commutant_orthogonal(std::mt19937_64& rng, const std::vector<Matrix>& generators, int dim);

// Sp(n+1) acting on the cone: orthogonal maps commuting with I1, I2, I3.
Matrix random_sp_cone(std::mt19937_64& rng, const HKModel& hk);

// (A, lambda) in Sp(n) x U(1) with lambda = e^{i phi}, acting by (h, z) -> (A h lambda^{-1}, lambda^{-2} z).
Matrix sp_u1_element(const TwistorModel& T, const Matrix& A, double phi);
Matrix random_sp_n(std::mt19937_64& rng, const TwistorModel& T);
Matrix random_sp_u1(std::mt19937_64& rng, const TwistorModel& T);
// Generic element of U(2n) x U(1) for the complex structure J_plus.
Matrix random_u2n_u1(std::mt19937_64& rng, const TwistorModel& T);

}  // namespace caliber
