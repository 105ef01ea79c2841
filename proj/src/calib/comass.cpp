#include "caliber/calib/comass.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "caliber/exterior/dense.hpp"
#include "caliber/parallel.hpp"

namespace caliber {

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxHalvings = 30;

// Dense evaluator of a fixed form; contraction tables are shared per dimension.
class Evaluator {
 public:
  explicit Evaluator(const AltForm& f) : f_(f), k_(f.degree()) {
    if (f.dim() <= kMaxDenseDim) {
      lay_ = &DenseLayout::get(f.dim());
      dense_.assign(lay_->count(k_), 0.0);
      for (const auto& [m, c] : f.terms()) dense_[lay_->rank(m)] = c;
    }
  }

  double value(const Matrix& V) const {
    if (!lay_) return evaluate(f_, V);
    std::vector<double> cur = dense_, next;
    for (int j = 0; j < k_; ++j) {
      lay_->contract(V.col(j).data(), cur, k_ - j, next);
      cur.swap(next);
    }
    return cur[0];
  }

  Matrix gradient(const Matrix& V) const {
    const int N = f_.dim();
    Matrix G(N, k_);
    if (!lay_) {
      for (int j = 0; j < k_; ++j)
        for (int i = 0; i < N; ++i) {
          Matrix W = V;
          W.col(j) = Vector::Unit(N, i);
          G(i, j) = evaluate(f_, W);
        }
      return G;
    }
    // prefix[j] = v_{j-1} ⌟ ... ⌟ v_0 ⌟ f, whose first slot is slot j of f.
    std::vector<std::vector<double>> prefix(k_);
    prefix[0] = dense_;
    for (int j = 1; j < k_; ++j) lay_->contract(V.col(j - 1).data(), prefix[j - 1], k_ - j + 1, prefix[j]);
    std::vector<double> cur, next;
    for (int j = 0; j < k_; ++j) {
      cur = prefix[j];
      for (int m = j + 1; m < k_; ++m) {
        lay_->contract(V.col(m).data(), cur, k_ - m + 1, next);
        cur.swap(next);
      }
      // cur(e) = prefix[j](v_{j+1}, ..., v_{k-1}, e); move e back to slot j.
      const double sign = ((k_ - 1 - j) % 2) ? -1.0 : 1.0;
      for (int i = 0; i < N; ++i) G(i, j) = sign * cur[i];
    }
    return G;
  }

 private:
  const AltForm& f_;
  int k_;
  const DenseLayout* lay_ = nullptr;
  std::vector<double> dense_;
};

// Modified Gram-Schmidt that reports failure instead of throwing.
bool mgs(Matrix& q) {
  for (int j = 0; j < q.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < j; ++i) q.col(j) -= q.col(i).dot(q.col(j)) * q.col(i);
    const double nrm = q.col(j).norm();
    if (!(nrm > 1e-300)) return false;
    q.col(j) /= nrm;
  }
  return true;
}

struct Trial {
  Matrix V;
  double value = 0;
  Matrix xi;
  double gn = 0;
};

bool make_trial(const Evaluator& ev, const Matrix& V, const Matrix& xi, double t, Trial& out) {
  out.V = V + t * xi;
  if (!mgs(out.V)) return false;
  out.value = ev.value(out.V);
  out.xi = ev.gradient(out.V) - out.value * out.V;
  out.gn = out.xi.norm();
  return true;
}

// Trial b improves on a: higher value, or equal value to rounding and smaller gradient.
bool improves(const Trial& b, const Trial& a, double slack) {
  if (b.value > a.value + slack) return true;
  if (b.value < a.value - slack) return false;
  return b.gn < a.gn;
}

AscentResult ascend(const Evaluator& ev, Matrix V, int max_iters, double tol) {
  AscentResult out;
  Trial cur;
  cur.V = std::move(V);
  cur.value = ev.value(cur.V);
  cur.xi = ev.gradient(cur.V) - cur.value * cur.V;
  cur.gn = cur.xi.norm();
  for (int it = 0;; ++it) {
    out.gradient_norm = cur.gn;
    out.iterations = it;
    if (cur.gn < tol) {
      out.converged = true;
      break;
    }
    if (it >= max_iters) break;
    const double slack = 1e-15 * std::max(1.0, std::abs(cur.value));
    const double g2 = cur.gn * cur.gn;
    // Armijo backtracking from t = 1; after the first acceptable step, keep halving while it helps.
    double t = 1.0;
    int h = 0;
    Trial best;
    bool found = false;
    for (; h <= kMaxHalvings && !found; ++h, t *= 0.5) {
      Trial tr;
      if (!make_trial(ev, cur.V, cur.xi, t, tr)) continue;
      if (tr.value - cur.value >= kArmijo * t * g2 - slack && improves(tr, cur, slack)) {
        best = std::move(tr);
        found = true;
      }
    }
    if (!found) break;
    for (; h <= kMaxHalvings; ++h, t *= 0.5) {
      Trial tr;
      if (!make_trial(ev, cur.V, cur.xi, t, tr) || !improves(tr, best, slack)) break;
      best = std::move(tr);
    }
    cur = std::move(best);
  }
  out.value = cur.value;
  out.plane = Plane::from_frame(cur.V);
  return out;
}

Matrix random_frame(std::uint64_t seed, int N, int k) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Matrix V(N, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < N; ++i) V(i, j) = g(rng);
  return orthonormalize(V, 0.0);
}

}  // namespace

Matrix multilinear_gradient(const AltForm& f, const Matrix& V) { return Evaluator(f).gradient(V); }

AscentResult stiefel_ascent(const AltForm& f, const Matrix& start, int max_iters, double tol) {
  if (start.cols() != f.degree() || start.rows() != f.dim()) throw DimensionMismatch("ascent: frame shape");
  return ascend(Evaluator(f), orthonormalize(start), max_iters, tol);
}

bool canonical_less(const Plane& a, const Plane& b) {
  const Matrix pa = a.projector(), pb = b.projector();
  for (int i = 0; i < pa.size(); ++i) {
    const double d = pa.data()[i] - pb.data()[i];
    if (std::abs(d) > 1e-12) return d < 0;
  }
  return false;
}

double plane_distance(const Plane& a, const Plane& b) {
  return (a.projector() - b.projector()).norm() / std::sqrt(2.0);
}

ComassResult comass_search(const AltForm& f, int k, const ComassParams& params) {
  if (k != f.degree()) throw InvalidArgument("comass: k must equal the form degree");
  if (params.restarts < 1) throw InvalidArgument("comass: restarts must be positive");
  if (k < 1 || k > f.dim()) throw InvalidArgument("comass: degree out of range");
  const int N = f.dim();
  ComassResult res;
  res.restarts_used = params.restarts;
  if (f.is_zero()) {
    res.argmax = Plane::from_frame(random_frame(params.seed, N, k));
    res.converged_fraction = 1.0;
    res.maximizers = {res.argmax};
    res.restart_values.assign(params.restarts, 0.0);
    return res;
  }
  const Evaluator ev(f);
  std::vector<AscentResult> runs(params.restarts);
  parallel_for(runs.size(), [&](std::size_t r) {
    Matrix V = random_frame(params.seed + r, N, k);
    if (ev.value(V) < 0) V.col(0) = -V.col(0);
    runs[r] = ascend(ev, std::move(V), params.max_iters, params.tol);
  });
  // Reduction in restart order, independent of scheduling.
  std::size_t best = 0;
  int converged = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    res.restart_values.push_back(runs[r].value);
    converged += runs[r].converged;
    const double d = runs[r].value - runs[best].value;
    if (d > params.tie_tol || (std::abs(d) <= params.tie_tol && canonical_less(runs[r].plane, runs[best].plane)))
      best = r;
  }
  res.value = runs[best].value;
  res.argmax = runs[best].plane;
  res.converged_fraction = static_cast<double>(converged) / static_cast<double>(runs.size());
  std::vector<std::size_t> order;
  for (std::size_t r = 0; r < runs.size(); ++r)
    if (runs[r].value >= res.value - params.maximizer_tol) order.push_back(r);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return runs[a].value > runs[b].value; });
  res.maximizers.push_back(res.argmax);
  for (std::size_t r : order) {
    bool fresh = true;
    for (const Plane& m : res.maximizers) fresh = fresh && plane_distance(m, runs[r].plane) > 1e-6;
    if (fresh) res.maximizers.push_back(runs[r].plane);
  }
  return res;
}

ComassResult comass_search_metric(const AltForm& f, const Matrix& G, const ComassParams& params) {
  if (G.rows() != f.dim() || G.cols() != f.dim()) throw DimensionMismatch("metric has wrong size");
  Eigen::SelfAdjointEigenSolver<Matrix> es(G);
  if (es.eigenvalues().minCoeff() <= 0) throw InvalidArgument("metric must be positive definite");
  const Matrix S = es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                   es.eigenvectors().transpose();
  return comass_search(pullback(f, S), f.degree(), params);
}

double comass_2form_exact(const AltForm& f) {
  if (f.degree() != 2) throw InvalidArgument("exact comass oracle needs a 2-form");
  if (f.is_zero()) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(skew_matrix(f));
  return svd.singularValues()(0);
}

}  // namespace caliber
