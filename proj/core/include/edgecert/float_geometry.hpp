#ifndef EDGECERT_FLOAT_GEOMETRY_HPP_
#define EDGECERT_FLOAT_GEOMETRY_HPP_

#include <limits>
#include <vector>

#include "edgecert/complex.hpp"

namespace edgecert {

using FloatPoint = std::vector<double>;

/// Floating-point distance between the convex hulls of two point sets. Every
/// pair of faces is tried: the closest points of their affine hulls are found
/// by least squares and kept if both barycentric weight vectors are
/// non-negative. Intended for simplices of a handful of vertices.
double float_simplex_distance(const std::vector<FloatPoint>& x, const std::vector<FloatPoint>& y);

/// Minimum float distance over maximal non-adjacent pairs; +inf if none.
double float_collision_distance(const SimplicialComplex& c, const std::vector<FloatPoint>& coords);

/// Heuristic self-intersection test: some non-adjacent pair closer than
/// `threshold`. False negatives are caught later by the exact check.
bool float_self_intersection_heuristic(const SimplicialComplex& c, const std::vector<FloatPoint>& coords,
                                       double threshold = 1e-6);

}  // namespace edgecert

#endif  // EDGECERT_FLOAT_GEOMETRY_HPP_
