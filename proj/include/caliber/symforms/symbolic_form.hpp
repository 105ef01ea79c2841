#pragma once

#include <string>
#include <vector>

#include "caliber/exterior/alt_form.hpp"
#include "caliber/symforms/rcoefficient.hpp"

namespace caliber {

using RationalForm = Form<RCoefficient>;
using CRationalForm = ComplexForm<RCoefficient>;

struct PolyVectorField {
  std::vector<RCoefficient> components;
  int dim() const { return static_cast<int>(components.size()); }
};

// R = sum x_i d/dx_i.
PolyVectorField dilation_field(int dim);
// d/dr = R / r.
PolyVectorField radial_field(int dim);
// The field x -> M x / r^s for a constant matrix given by integer entries.
PolyVectorField linear_field(const std::vector<std::vector<int>>& M, int r_exp);

RationalForm radial_one_form(int dim);   // dr
RationalForm euler_one_form(int dim);    // r dr = sum x_i dx_i

RationalForm lift(const ExactForm& f);
RationalForm times_r_power(const RationalForm& f, int m);
CRationalForm times_r_power(const CRationalForm& f, int m);
RationalForm scaled(const mpq_class& q, const RationalForm& f);
CRationalForm scaled(const mpq_class& q, const CRationalForm& f);

RationalForm ext_d(const RationalForm& f);
CRationalForm ext_d(const CRationalForm& f);

RationalForm interior(const PolyVectorField& X, const RationalForm& f);
CRationalForm interior(const PolyVectorField& X, const CRationalForm& f);

RationalForm lie_derivative(const PolyVectorField& X, const RationalForm& f);
CRationalForm lie_derivative(const PolyVectorField& X, const CRationalForm& f);

struct ConeSplit {
  RationalForm alpha;
  RationalForm beta;
};
struct ComplexConeSplit {
  CRationalForm alpha;
  CRationalForm beta;
};

// f = dr ^ alpha + beta with alpha and beta annihilated by d/dr.
ConeSplit cone_split(const RationalForm& f);
ComplexConeSplit cone_split(const CRationalForm& f);

// For closed f with L_R f = k f, returns (r^k / k) * (R ⌟ f) / r^k.
RationalForm homogeneous_potential(const RationalForm& f, int k);

AltForm evaluate_at(const RationalForm& f, const Vector& x);
CAltForm evaluate_at(const CRationalForm& f, const Vector& x);

std::size_t term_count(const RationalForm& f);
std::size_t term_count(const CRationalForm& f);
std::string describe_leading_term(const RationalForm& f);

}  // namespace caliber
