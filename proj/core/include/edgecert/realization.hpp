#ifndef EDGECERT_REALIZATION_HPP_
#define EDGECERT_REALIZATION_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgecert/complex.hpp"
#include "edgecert/matrix.hpp"
#include "edgecert/rational.hpp"
#include "edgecert/simplex_distance.hpp"

namespace edgecert {

/// Rational coordinates in E^d for every vertex of a complex.
class Realization {
 public:
  /// `coords[v]` belongs to vertex index v. Throws std::invalid_argument when
  /// a vertex is missing or has the wrong number of coordinates.
  Realization(SimplicialComplex complex, std::size_t dim, std::vector<Point> coords);
  static Realization from_labels(SimplicialComplex complex, std::size_t dim,
                                 const std::map<std::string, Point>& coords);

  const SimplicialComplex& complex() const { return complex_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Point>& coords() const { return coords_; }
  const Point& coord(std::size_t v) const { return coords_.at(v); }
  const Point& coord(const std::string& label) const;

  /// Realized vertex positions of a simplex.
  std::vector<Point> vertices_of(const Simplex& s) const;

  /// Copy with vertex v moved to `p`.
  Realization with_vertex(std::size_t v, Point p) const;

  friend bool operator==(const Realization& a, const Realization& b) {
    return a.dim_ == b.dim_ && a.coords_ == b.coords_ && a.complex_.labels() == b.complex_.labels() &&
           a.complex_.simplices() == b.complex_.simplices();
  }

 private:
  SimplicialComplex complex_;
  std::size_t dim_;
  std::vector<Point> coords_;
};

/// Desired squared edge lengths: explicit per-edge entries plus an optional
/// default for the remaining edges.
class SquaredLengthSpec {
 public:
  SquaredLengthSpec() = default;

  /// Throws std::invalid_argument for a non-positive value, a loop, or a
  /// duplicate entry.
  void set(const std::string& a, const std::string& b, Rational value);
  void set_default(Rational value);

  const std::optional<Rational>& default_value() const { return default_; }
  /// Entries in insertion order, each with its labels as given.
  const std::vector<std::pair<std::pair<std::string, std::string>, Rational>>& entries() const {
    return entries_;
  }

  /// Desired value for every edge in the complex's edge order. Throws
  /// std::invalid_argument if an edge has no value or an entry names a pair
  /// that is not an edge of the complex.
  std::vector<Rational> resolve(const SimplicialComplex& c) const;

  friend bool operator==(const SquaredLengthSpec&, const SquaredLengthSpec&) = default;

 private:
  std::vector<std::pair<std::pair<std::string, std::string>, Rational>> entries_;
  std::optional<Rational> default_;
};

/// Exact squared length of every edge, in edge order.
std::vector<Rational> squared_lengths(const Realization& r);

/// Jacobian of the squared-length map: |E| x d|V|, column v*d + k is
/// coordinate k of vertex v. Row (i, j) holds 2(x_i - x_j) in block i and
/// 2(x_j - x_i) in block j.
RatMatrix length_jacobian(const Realization& r);

struct CollisionDistance {
  /// nullopt when the complex has no non-adjacent pair (distance +infinity).
  std::optional<Rational> squared;
  std::optional<SimplexPair> witness;
  std::optional<SimplexDistance> closest;
  std::size_t pairs_checked = 0;

  bool unconstrained() const { return !squared.has_value(); }
};

/// Exact squared collision distance: minimum squared distance over maximal
/// non-adjacent simplex pairs. Ties keep the first pair in enumeration order.
CollisionDistance collision_distance_squared(const Realization& r, bool maximal_only = true);

/// True iff the collision distance is exactly zero.
bool is_self_intersecting(const Realization& r);

}  // namespace edgecert

#endif  // EDGECERT_REALIZATION_HPP_
