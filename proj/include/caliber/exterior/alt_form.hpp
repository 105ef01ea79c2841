#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>
#include "json.hpp"

#include "caliber/exterior/form.hpp"

namespace caliber {

using AltForm = Form<double>;
using CAltForm = ComplexForm<double>;
using ExactForm = Form<mpq_class>;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using cplx = std::complex<double>;

template <>
struct CoeffTraits<mpq_class> {
  static bool is_zero(const mpq_class& c) { return sgn(c) == 0; }
  static mpq_class zero() { return mpq_class(0); }
};

AltForm covector(const Vector& v);
AltForm one_form(int dim, int index, double c = 1.0);
AltForm constant(int dim, double c);

AltForm interior(const Vector& v, const AltForm& a);
CAltForm interior(const Vector& v, const CAltForm& a);

// a evaluated on the columns of frame (N x k).
double evaluate(const AltForm& a, const Matrix& frame);
cplx evaluate(const CAltForm& a, const Matrix& frame);
double evaluate(const AltForm& a, const std::vector<Vector>& vs);

// L is N x M; the result lives on R^M.
AltForm pullback(const AltForm& a, const Matrix& L);
CAltForm pullback(const CAltForm& a, const Matrix& L);

AltForm hodge(const AltForm& a, int orientation = 1);

// Derivation induced by an endomorphism J: sum over slots of a(..., J X_i, ...).
AltForm j_derivation(const AltForm& a, const Matrix& J);
CAltForm j_derivation(const CAltForm& a, const Matrix& J);

CAltForm scale(cplx s, const CAltForm& a);
CAltForm complexify(const AltForm& a);

double max_abs_coeff(const AltForm& a);
double max_abs_diff(const AltForm& a, const AltForm& b);
double max_abs_diff(const CAltForm& a, const CAltForm& b);
bool approx_equal(const AltForm& a, const AltForm& b, double tol = 1e-9);
bool approx_equal(const CAltForm& a, const CAltForm& b, double tol = 1e-9);
AltForm pruned(const AltForm& a, double tol);

Matrix skew_matrix(const AltForm& two_form);
AltForm from_skew_matrix(const Matrix& S);

AltForm to_numeric(const ExactForm& f);

nlohmann::json to_json(const CAltForm& a);
nlohmann::json to_json(const AltForm& a);
CAltForm complex_form_from_json(const nlohmann::json& j);

}  // namespace caliber
