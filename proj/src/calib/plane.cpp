#include "caliber/calib/plane.hpp"

namespace caliber {

Matrix orthonormalize(const Matrix& frame, double rank_tol) {
  Matrix q = frame;
  const double scale = std::max(1.0, frame.cwiseAbs().maxCoeff());
  for (int j = 0; j < q.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < j; ++i) q.col(j) -= q.col(i).dot(q.col(j)) * q.col(i);
    const double nrm = q.col(j).norm();
    if (nrm <= rank_tol * scale) throw InvalidArgument("plane frame is rank deficient");
    q.col(j) /= nrm;
  }
  return q;
}

Plane Plane::from_frame(const Matrix& frame, double rank_tol) {
  if (frame.cols() > frame.rows()) throw InvalidArgument("plane has more vectors than the ambient dimension");
  return Plane(orthonormalize(frame, rank_tol));
}

Plane Plane::from_vectors(const std::vector<Vector>& vs, double rank_tol) {
  if (vs.empty()) throw InvalidArgument("plane needs at least one vector");
  Matrix m(vs.front().size(), static_cast<Eigen::Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != m.rows()) throw DimensionMismatch("plane vectors differ in length");
    m.col(static_cast<Eigen::Index>(i)) = vs[i];
  }
  return from_frame(m, rank_tol);
}

Plane Plane::from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j.contains("frame")) throw InvalidArgument("plane json needs dim and frame");
  const int N = j.at("dim").get<int>();
  std::vector<Vector> vs;
  for (const auto& row : j.at("frame")) {
    auto vals = row.get<std::vector<double>>();
    if (static_cast<int>(vals.size()) != N) throw DimensionMismatch("plane row length differs from dim");
    vs.push_back(Eigen::Map<Vector>(vals.data(), N));
  }
  return from_vectors(vs);
}

nlohmann::json Plane::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < degree(); ++i) {
    std::vector<double> v(frame_.col(i).data(), frame_.col(i).data() + dim());
    rows.push_back(v);
  }
  return {{"dim", dim()}, {"frame", rows}};
}

double evaluate(const AltForm& a, const Plane& P) { return evaluate(a, P.frame()); }
cplx evaluate(const CAltForm& a, const Plane& P) { return evaluate(a, P.frame()); }

}  // namespace caliber
