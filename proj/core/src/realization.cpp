#include "edgecert/realization.hpp"

#include <stdexcept>

namespace edgecert {

Realization::Realization(SimplicialComplex complex, std::size_t dim, std::vector<Point> coords)
    : complex_(std::move(complex)), dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0) throw std::invalid_argument("realization dimension must be positive");
  if (coords_.size() != complex_.num_vertices()) {
    throw std::invalid_argument("realization has " + std::to_string(coords_.size()) +
                                " coordinate vectors for " + std::to_string(complex_.num_vertices()) +
                                " vertices");
  }
  for (std::size_t v = 0; v < coords_.size(); ++v) {
    if (coords_[v].size() != dim_) {
      throw std::invalid_argument("vertex '" + complex_.label(v) + "' has " +
                                  std::to_string(coords_[v].size()) + " coordinates, expected " +
                                  std::to_string(dim_));
    }
  }
}

Realization Realization::from_labels(SimplicialComplex complex, std::size_t dim,
                                     const std::map<std::string, Point>& coords) {
  std::vector<Point> ordered;
  ordered.reserve(complex.num_vertices());
  for (const auto& label : complex.labels()) {
    const auto it = coords.find(label);
    if (it == coords.end()) throw std::invalid_argument("no coordinates for vertex '" + label + "'");
    ordered.push_back(it->second);
  }
  for (const auto& [label, p] : coords) {
    if (!complex.index_of(label)) throw std::invalid_argument("coordinates for unknown vertex '" + label + "'");
  }
  return {std::move(complex), dim, std::move(ordered)};
}

const Point& Realization::coord(const std::string& label) const {
  const auto v = complex_.index_of(label);
  if (!v) throw std::out_of_range("unknown vertex '" + label + "'");
  return coords_[*v];
}

std::vector<Point> Realization::vertices_of(const Simplex& s) const {
  std::vector<Point> out;
  out.reserve(s.size());
  for (std::size_t v : s) out.push_back(coords_.at(v));
  return out;
}

Realization Realization::with_vertex(std::size_t v, Point p) const {
  std::vector<Point> coords = coords_;
  coords.at(v) = std::move(p);
  return {complex_, dim_, std::move(coords)};
}

void SquaredLengthSpec::set(const std::string& a, const std::string& b, Rational value) {
  if (a == b) throw std::invalid_argument("squared length given for loop '" + a + "'");
  if (value.sign() <= 0) {
    throw std::invalid_argument("desired squared length for (" + a + ", " + b + ") must be positive");
  }
  for (const auto& [key, v] : entries_) {
    if ((key.first == a && key.second == b) || (key.first == b && key.second == a)) {
      throw std::invalid_argument("duplicate squared length for (" + a + ", " + b + ")");
    }
  }
  entries_.push_back({{a, b}, std::move(value)});
}

void SquaredLengthSpec::set_default(Rational value) {
  if (value.sign() <= 0) throw std::invalid_argument("default squared length must be positive");
  default_ = std::move(value);
}

std::vector<Rational> SquaredLengthSpec::resolve(const SimplicialComplex& c) const {
  std::vector<std::optional<Rational>> values(c.num_edges());
  for (const auto& [key, value] : entries_) {
    const auto a = c.index_of(key.first);
    const auto b = c.index_of(key.second);
    const auto e = (a && b) ? c.edge_index(*a, *b) : std::nullopt;
    if (!e) throw std::invalid_argument("(" + key.first + ", " + key.second + ") is not an edge of the complex");
    values[*e] = value;
  }
  std::vector<Rational> out;
  out.reserve(values.size());
  for (std::size_t e = 0; e < values.size(); ++e) {
    if (values[e]) {
      out.push_back(*values[e]);
    } else if (default_) {
      out.push_back(*default_);
    } else {
      const auto& [i, j] = c.edges()[e];
      throw std::invalid_argument("no desired squared length for edge (" + c.label(i) + ", " + c.label(j) + ")");
    }
  }
  return out;
}

std::vector<Rational> squared_lengths(const Realization& r) {
  std::vector<Rational> out;
  out.reserve(r.complex().num_edges());
  for (const auto& [i, j] : r.complex().edges()) {
    out.push_back(squared_norm_difference(r.coord(i), r.coord(j)));
  }
  return out;
}

RatMatrix length_jacobian(const Realization& r) {
  const auto& edges = r.complex().edges();
  const std::size_t d = r.dim();
  RatMatrix jac(edges.size(), d * r.complex().num_vertices());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& [i, j] = edges[e];
    for (std::size_t k = 0; k < d; ++k) {
      const Rational diff = (r.coord(i)[k] - r.coord(j)[k]) * Rational(2);
      jac(e, i * d + k) = diff;
      jac(e, j * d + k) = -diff;
    }
  }
  return jac;
}

CollisionDistance collision_distance_squared(const Realization& r, bool maximal_only) {
  CollisionDistance out;
  for (const auto& pair : non_adjacent_pairs(r.complex(), maximal_only)) {
    SimplexDistance dist = simplex_square_distance(r.vertices_of(pair.first), r.vertices_of(pair.second));
    ++out.pairs_checked;
    if (!out.squared || dist.squared_distance < *out.squared) {
      out.squared = dist.squared_distance;
      out.witness = pair;
      out.closest = std::move(dist);
    }
  }
  return out;
}

bool is_self_intersecting(const Realization& r) {
  const CollisionDistance cd = collision_distance_squared(r);
  return cd.squared && cd.squared->is_zero();
}

}  // namespace edgecert
