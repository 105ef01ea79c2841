#include "caliber/exterior/alt_form.hpp"

#include <cmath>
#include <map>

#include "caliber/exterior/dense.hpp"

namespace caliber {

namespace {

std::vector<double> to_dense(const AltForm& a, const DenseLayout& lay) {
  std::vector<double> d(lay.count(a.degree()), 0.0);
  for (const auto& [m, c] : a.terms()) d[lay.rank(m)] = c;
  return d;
}

std::vector<double> as_std(const Vector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

}  // namespace

AltForm covector(const Vector& v) {
  std::vector<AltForm::Term> terms;
  for (int i = 0; i < v.size(); ++i)
    if (v[i] != 0.0) terms.emplace_back(BladeMask{1} << i, v[i]);
  return AltForm::from_terms(static_cast<int>(v.size()), 1, std::move(terms));
}

AltForm one_form(int dim, int index, double c) { return AltForm::basis(dim, {index}, c); }

AltForm constant(int dim, double c) { return AltForm::scalar(dim, c); }

AltForm interior(const Vector& v, const AltForm& a) {
  if (v.size() != a.dim()) throw DimensionMismatch("interior: dimension mismatch");
  return interior(as_std(v), a);
}

CAltForm interior(const Vector& v, const CAltForm& a) { return {interior(v, a.re), interior(v, a.im)}; }

double evaluate(const AltForm& a, const Matrix& frame) {
  if (frame.rows() != a.dim()) throw DimensionMismatch("evaluate: vector dimension mismatch");
  if (frame.cols() != a.degree()) throw InvalidArgument("evaluate: arity mismatch");
  const int k = a.degree();
  if (k == 0) return a.coefficient(0);
  if (a.dim() <= kMaxDenseDim) {
    const auto& lay = DenseLayout::get(a.dim());
    std::vector<double> cur = to_dense(a, lay), next;
    for (int j = 0; j < k; ++j) {
      lay.contract(frame.col(j).data(), cur, k - j, next);
      cur.swap(next);
    }
    return cur[0];
  }
  AltForm cur = a;
  for (int j = 0; j < k; ++j) cur = interior(Vector(frame.col(j)), cur);
  return cur.coefficient(0);
}

cplx evaluate(const CAltForm& a, const Matrix& frame) { return {evaluate(a.re, frame), evaluate(a.im, frame)}; }

double evaluate(const AltForm& a, const std::vector<Vector>& vs) {
  if (static_cast<int>(vs.size()) != a.degree()) throw InvalidArgument("evaluate: arity mismatch");
  Matrix F(a.dim(), static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (vs[j].size() != a.dim()) throw DimensionMismatch("evaluate: vector dimension mismatch");
    F.col(static_cast<Eigen::Index>(j)) = vs[j];
  }
  return evaluate(a, F);
}

AltForm pullback(const AltForm& a, const Matrix& L) {
  if (L.rows() != a.dim()) throw DimensionMismatch("pullback: matrix rows must equal form dimension");
  const int M = static_cast<int>(L.cols());
  const int k = a.degree();
  if (M < 1) throw InvalidArgument("pullback: empty source space");
  if (k == 0) return AltForm::scalar(M, a.coefficient(0));
  if (k > M) return AltForm(M, k);
  if (a.dim() > kMaxDenseDim || M > kMaxDenseDim) {
    AltForm acc(M, k);
    for (const auto& [m, c] : a.terms()) {
      AltForm piece = AltForm::scalar(M, c);
      for (int i : blade::indices(m)) piece = wedge(piece, covector(Vector(L.row(i).transpose())));
      acc += piece;
    }
    return acc;
  }
  const auto& lay = DenseLayout::get(a.dim());
  std::vector<std::vector<double>> buf(k + 1);
  buf[0] = to_dense(a, lay);
  std::vector<AltForm::Term> out;
  Matrix W = L;
  // Depth-first over increasing column subsets, sharing partial contractions.
  struct Frame {
    int depth;
    int next;
    BladeMask mask;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.depth == k) {
      if (buf[k][0] != 0.0) out.emplace_back(f.mask, buf[k][0]);
      stack.pop_back();
      continue;
    }
    if (f.next > M - (k - f.depth)) {
      stack.pop_back();
      continue;
    }
    const int j = f.next++;
    const int d = f.depth;
    const BladeMask mask = f.mask | (BladeMask{1} << j);
    lay.contract(W.col(j).data(), buf[d], k - d, buf[d + 1]);
    bool any = false;
    for (double x : buf[d + 1])
      if (x != 0.0) {
        any = true;
        break;
      }
    if (any) stack.push_back({d + 1, j + 1, mask});
  }
  return AltForm::from_terms(M, k, std::move(out));
}

CAltForm pullback(const CAltForm& a, const Matrix& L) { return {pullback(a.re, L), pullback(a.im, L)}; }

AltForm hodge(const AltForm& a, int orientation) {
  const int N = a.dim();
  const BladeMask all = blade::full(N);
  std::vector<AltForm::Term> terms;
  terms.reserve(a.size());
  for (const auto& [m, c] : a.terms()) {
    BladeMask comp = all & ~m;
    terms.emplace_back(comp, orientation * blade::wedge_sign(m, comp) * c);
  }
  return AltForm::from_terms(N, N - a.degree(), std::move(terms));
}

AltForm j_derivation(const AltForm& a, const Matrix& J) {
  const int N = a.dim();
  if (J.rows() != N || J.cols() != N) throw DimensionMismatch("j_derivation: endomorphism shape mismatch");
  std::map<BladeMask, double> acc;
  for (const auto& [m, c] : a.terms()) {
    int pos = 0;
    for (BladeMask rest = m; rest; rest &= rest - 1, ++pos) {
      const int i = std::countr_zero(rest);
      const BladeMask others = m & ~(BladeMask{1} << i);
      for (int b = 0; b < N; ++b) {
        const double jb = J(i, b);
        if (jb == 0.0) continue;
        const int s = blade::wedge_sign(BladeMask{1} << b, others);
        if (s == 0) continue;
        acc[others | (BladeMask{1} << b)] += ((pos & 1) ? -1.0 : 1.0) * s * jb * c;
      }
    }
  }
  return AltForm::from_map(N, a.degree(), std::move(acc));
}

CAltForm j_derivation(const CAltForm& a, const Matrix& J) { return {j_derivation(a.re, J), j_derivation(a.im, J)}; }

CAltForm scale(cplx s, const CAltForm& a) {
  return {s.real() * a.re - s.imag() * a.im, s.real() * a.im + s.imag() * a.re};
}

CAltForm complexify(const AltForm& a) { return CAltForm::real(a); }

double max_abs_coeff(const AltForm& a) {
  double m = 0.0;
  for (const auto& t : a.terms()) m = std::max(m, std::abs(t.second));
  return m;
}

double max_abs_diff(const AltForm& a, const AltForm& b) { return max_abs_coeff(a - b); }

double max_abs_diff(const CAltForm& a, const CAltForm& b) {
  return std::max(max_abs_diff(a.re, b.re), max_abs_diff(a.im, b.im));
}

bool approx_equal(const AltForm& a, const AltForm& b, double tol) {
  return a.dim() == b.dim() && a.degree() == b.degree() && max_abs_diff(a, b) <= tol;
}

bool approx_equal(const CAltForm& a, const CAltForm& b, double tol) {
  return approx_equal(a.re, b.re, tol) && approx_equal(a.im, b.im, tol);
}

AltForm pruned(const AltForm& a, double tol) {
  std::vector<AltForm::Term> terms;
  for (const auto& t : a.terms())
    if (std::abs(t.second) > tol) terms.push_back(t);
  return AltForm::from_terms(a.dim(), a.degree(), std::move(terms));
}

Matrix skew_matrix(const AltForm& f) {
  if (f.degree() != 2) throw InvalidArgument("skew_matrix: expected a 2-form");
  Matrix S = Matrix::Zero(f.dim(), f.dim());
  for (const auto& [m, c] : f.terms()) {
    auto idx = blade::indices(m);
    S(idx[0], idx[1]) = c;
    S(idx[1], idx[0]) = -c;
  }
  return S;
}

AltForm from_skew_matrix(const Matrix& S) {
  if (S.rows() != S.cols()) throw DimensionMismatch("from_skew_matrix: matrix must be square");
  const int N = static_cast<int>(S.rows());
  std::vector<AltForm::Term> terms;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if (S(i, j) != 0.0) terms.emplace_back((BladeMask{1} << i) | (BladeMask{1} << j), S(i, j));
  return AltForm::from_terms(N, 2, std::move(terms));
}

AltForm to_numeric(const ExactForm& f) {
  std::vector<AltForm::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m, c.get_d());
  return AltForm::from_terms(f.dim(), f.degree(), std::move(terms));
}

nlohmann::json to_json(const CAltForm& a) {
  std::map<BladeMask, std::pair<double, double>> merged;
  for (const auto& [m, c] : a.re.terms()) merged[m].first = c;
  for (const auto& [m, c] : a.im.terms()) merged[m].second = c;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : merged)
    terms.push_back({{"indices", blade::indices(m)}, {"re", c.first}, {"im", c.second}});
  return {{"dim", a.dim()}, {"degree", a.degree()}, {"terms", terms}};
}

nlohmann::json to_json(const AltForm& a) { return to_json(CAltForm::real(a)); }

CAltForm complex_form_from_json(const nlohmann::json& j) {
  const int dim = j.at("dim").get<int>();
  const int degree = j.at("degree").get<int>();
  if (degree < 0 || degree > dim) throw InvalidArgument("form json: degree out of range");
  std::vector<AltForm::Term> re, im;
  for (const auto& t : j.at("terms")) {
    auto idx = t.at("indices").get<std::vector<int>>();
    if (static_cast<int>(idx.size()) != degree) throw InvalidArgument("form json: index list length differs from degree");
    BladeMask m = blade::from_indices(idx, dim);
    re.emplace_back(m, t.value("re", 0.0));
    im.emplace_back(m, t.value("im", 0.0));
  }
  return {AltForm::from_terms(dim, degree, std::move(re)), AltForm::from_terms(dim, degree, std::move(im))};
}

}  // namespace caliber
