#include "edgecert/float_geometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edgecert {

namespace {

constexpr double kWeightSlack = 1e-12;

using Eigen::MatrixXd;
using Eigen::VectorXd;

VectorXd to_eigen(const FloatPoint& p) {
  return Eigen::Map<const VectorXd>(p.data(), static_cast<Eigen::Index>(p.size()));
}

// Distance between the affine hulls of the two faces if the closest points
// lie inside both faces, otherwise +inf.
double face_pair_distance(const std::vector<VectorXd>& xs, const std::vector<VectorXd>& ys) {
  const auto m = static_cast<Eigen::Index>(xs.size());
  const auto n = static_cast<Eigen::Index>(ys.size());
  const Eigen::Index d = xs.front().size();
  // p = x0 + U a, q = y0 + W b; minimize |(x0 - y0) + U a - W b|.
  MatrixXd system(d, (m - 1) + (n - 1));
  for (Eigen::Index i = 1; i < m; ++i) system.col(i - 1) = xs[i] - xs[0];
  for (Eigen::Index j = 1; j < n; ++j) system.col(m - 1 + j - 1) = -(ys[j] - ys[0]);
  const VectorXd rhs = ys[0] - xs[0];
  VectorXd params = VectorXd::Zero(system.cols());
  if (system.cols() > 0) params = system.completeOrthogonalDecomposition().solve(rhs);

  double alpha0 = 1.0;
  for (Eigen::Index i = 0; i < m - 1; ++i) {
    if (params(i) < -kWeightSlack) return std::numeric_limits<double>::infinity();
    alpha0 -= params(i);
  }
  double beta0 = 1.0;
  for (Eigen::Index j = 0; j < n - 1; ++j) {
    if (params(m - 1 + j) < -kWeightSlack) return std::numeric_limits<double>::infinity();
    beta0 -= params(m - 1 + j);
  }
  if (alpha0 < -kWeightSlack || beta0 < -kWeightSlack) return std::numeric_limits<double>::infinity();
  return (system * params - rhs).norm();
}

std::vector<std::vector<VectorXd>> faces(const std::vector<FloatPoint>& pts) {
  const std::size_t k = pts.size();
  if (k > 16) throw std::invalid_argument("float_simplex_distance: simplex too large");
  std::vector<std::vector<VectorXd>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<VectorXd> face;
    for (std::size_t b = 0; b < k; ++b) {
      if (mask & (std::size_t{1} << b)) face.push_back(to_eigen(pts[b]));
    }
    out.push_back(std::move(face));
  }
  return out;
}

}  // namespace

double float_simplex_distance(const std::vector<FloatPoint>& x, const std::vector<FloatPoint>& y) {
  if (x.empty() || y.empty()) throw std::invalid_argument("float_simplex_distance: empty simplex");
  const auto fx = faces(x);
  const auto fy = faces(y);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : fx) {
    for (const auto& b : fy) best = std::min(best, face_pair_distance(a, b));
  }
  return best;
}

double float_collision_distance(const SimplicialComplex& c, const std::vector<FloatPoint>& coords) {
  double best = std::numeric_limits<double>::infinity();
  auto gather = [&](const Simplex& s) {
    std::vector<FloatPoint> pts;
    for (std::size_t v : s) pts.push_back(coords.at(v));
    return pts;
  };
  for (const auto& pair : non_adjacent_pairs(c, true)) {
    best = std::min(best, float_simplex_distance(gather(pair.first), gather(pair.second)));
  }
  return best;
}

bool float_self_intersection_heuristic(const SimplicialComplex& c, const std::vector<FloatPoint>& coords,
                                       double threshold) {
  const double cd = float_collision_distance(c, coords);
  return !(cd >= threshold);
}

}  // namespace edgecert
