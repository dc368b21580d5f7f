#ifndef EDGECERT_SIMPLEX_DISTANCE_HPP_
#define EDGECERT_SIMPLEX_DISTANCE_HPP_

#include <stdexcept>
#include <vector>

#include "edgecert/rational.hpp"

namespace edgecert {

using Point = std::vector<Rational>;

/// Raised when the exact solver fails on an instance it must solve.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimplexDistance {
  Rational squared_distance;
  std::vector<Rational> alpha;  // barycentric weights on the first simplex
  std::vector<Rational> beta;   // barycentric weights on the second simplex
  Point closest_first;
  Point closest_second;
};

/// Exact minimum of |sum a_i x_i - sum b_j y_j|^2 over barycentric a, b,
/// solved as a convex QP through Lemke's algorithm. When the minimizer is
/// not unique any one minimizing pair is returned. Throws DimensionError on
/// empty input or mixed dimensions, SolverError if Lemke ray-terminates.
SimplexDistance simplex_square_distance(const std::vector<Point>& x, const std::vector<Point>& y);

/// Linear feasibility test for a common point of the two convex hulls, run
/// through the same pivoting engine with a zero objective.
bool simplices_intersect(const std::vector<Point>& x, const std::vector<Point>& y);

/// Sum of w_i p_i.
Point barycentric_point(const std::vector<Point>& vertices, const std::vector<Rational>& weights);

Rational squared_norm_difference(const Point& a, const Point& b);

}  // namespace edgecert

#endif  // EDGECERT_SIMPLEX_DISTANCE_HPP_
