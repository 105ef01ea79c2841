#include "caliber/symforms/symbolic_form.hpp"

#include <map>
#include <sstream>

namespace caliber {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > RCoefficient::kMaxVars) throw InvalidArgument("symbolic forms support dimension 1..12");
}

}  // namespace

PolyVectorField dilation_field(int dim) {
  check_dim(dim);
  PolyVectorField X;
  for (int i = 0; i < dim; ++i) X.components.push_back(RCoefficient::variable(dim, i));
  return X;
}

PolyVectorField radial_field(int dim) {
  PolyVectorField X = dilation_field(dim);
  for (auto& c : X.components) c = c.times_r_power(-1);
  return X;
}

PolyVectorField linear_field(const std::vector<std::vector<int>>& M, int r_exp) {
  const int dim = static_cast<int>(M.size());
  check_dim(dim);
  PolyVectorField X;
  X.components.assign(dim, RCoefficient::r_power(0, dim) - RCoefficient::r_power(0, dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (M[i][j] != 0)
        X.components[i] = X.components[i] + mpq_class(M[i][j]) * RCoefficient::variable(dim, j).times_r_power(r_exp);
  return X;
}

RationalForm euler_one_form(int dim) {
  check_dim(dim);
  std::vector<RationalForm::Term> terms;
  for (int i = 0; i < dim; ++i) terms.emplace_back(BladeMask{1} << i, RCoefficient::variable(dim, i));
  return RationalForm::from_terms(dim, 1, std::move(terms));
}

RationalForm radial_one_form(int dim) { return times_r_power(euler_one_form(dim), -1); }

RationalForm lift(const ExactForm& f) {
  check_dim(f.dim());
  std::vector<RationalForm::Term> terms;
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m, mpq_class(c) * RCoefficient::r_power(0, f.dim()));
  return RationalForm::from_terms(f.dim(), f.degree(), std::move(terms));
}

RationalForm times_r_power(const RationalForm& f, int m) {
  return f.map_coefficients([m](const RCoefficient& c) { return c.times_r_power(m); });
}

CRationalForm times_r_power(const CRationalForm& f, int m) { return {times_r_power(f.re, m), times_r_power(f.im, m)}; }

RationalForm scaled(const mpq_class& q, const RationalForm& f) {
  return f.map_coefficients([&q](const RCoefficient& c) { return q * c; });
}

CRationalForm scaled(const mpq_class& q, const CRationalForm& f) { return {scaled(q, f.re), scaled(q, f.im)}; }

RationalForm ext_d(const RationalForm& f) {
  const int N = f.dim();
  std::map<BladeMask, RCoefficient> acc;
  for (const auto& [m, c] : f.terms())
    for (int j = 0; j < N; ++j) {
      const BladeMask bit = BladeMask{1} << j;
      if (m & bit) continue;
      RCoefficient dc = c.derivative(j);
      if (dc.is_zero()) continue;
      RCoefficient& slot = acc[m | bit];
      slot = blade::wedge_sign(bit, m) > 0 ? slot + dc : slot - dc;
    }
  return RationalForm::from_map(N, f.degree() + 1, std::move(acc));
}

CRationalForm ext_d(const CRationalForm& f) { return {ext_d(f.re), ext_d(f.im)}; }

RationalForm interior(const PolyVectorField& X, const RationalForm& f) { return interior(X.components, f); }

CRationalForm interior(const PolyVectorField& X, const CRationalForm& f) {
  return {interior(X.components, f.re), interior(X.components, f.im)};
}

RationalForm lie_derivative(const PolyVectorField& X, const RationalForm& f) {
  RationalForm out = ext_d(f);
  out = interior(X, out);
  if (f.degree() > 0) out += ext_d(interior(X, f));
  return out;
}

CRationalForm lie_derivative(const PolyVectorField& X, const CRationalForm& f) {
  return {lie_derivative(X, f.re), lie_derivative(X, f.im)};
}

ConeSplit cone_split(const RationalForm& f) {
  if (f.degree() == 0) return {RationalForm(f.dim(), 0), f};
  RationalForm alpha = interior(radial_field(f.dim()), f);
  RationalForm beta = f - wedge(radial_one_form(f.dim()), alpha);
  return {std::move(alpha), std::move(beta)};
}

ComplexConeSplit cone_split(const CRationalForm& f) {
  ConeSplit re = cone_split(f.re), im = cone_split(f.im);
  return {CRationalForm(re.alpha, im.alpha), CRationalForm(re.beta, im.beta)};
}

RationalForm homogeneous_potential(const RationalForm& f, int k) {
  if (k == 0) throw InvalidArgument("homogeneous_potential: degree of homogeneity must be nonzero");
  RationalForm df = ext_d(f);
  if (!df.is_zero())
    throw NotClosed("form is not closed; residual " + std::to_string(term_count(df)) + " terms, leading " +
                    describe_leading_term(df));
  const PolyVectorField R = dilation_field(f.dim());
  RationalForm defect = lie_derivative(R, f) - scaled(mpq_class(k), f);
  if (!defect.is_zero())
    throw NotConical("form is not homogeneous of the stated degree; residual " + std::to_string(term_count(defect)) +
                     " terms, leading " + describe_leading_term(defect));
  // (r^k / k) * (R ⌟ f) / r^k
  return scaled(mpq_class(1, k), interior(R, f));
}

AltForm evaluate_at(const RationalForm& f, const Vector& x) {
  if (x.size() != f.dim()) throw DimensionMismatch("evaluate_at: point dimension mismatch");
  std::vector<AltForm::Term> terms;
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m, c.evaluate(x.data(), f.dim()));
  return AltForm::from_terms(f.dim(), f.degree(), std::move(terms));
}

CAltForm evaluate_at(const CRationalForm& f, const Vector& x) { return {evaluate_at(f.re, x), evaluate_at(f.im, x)}; }

std::size_t term_count(const RationalForm& f) {
  std::size_t n = 0;
  for (const auto& t : f.terms()) n += t.second.terms().size();
  return n;
}

std::size_t term_count(const CRationalForm& f) { return term_count(f.re) + term_count(f.im); }

std::string describe_leading_term(const RationalForm& f) {
  if (f.is_zero()) return "none";
  const auto& [m, c] = f.terms().front();
  std::ostringstream os;
  os << "(" << c.to_string() << ") d";
  bool first = true;
  for (int i : blade::indices(m)) {
    os << (first ? "x" : "^dx") << i;
    first = false;
  }
  return os.str();
}

}  // namespace caliber
