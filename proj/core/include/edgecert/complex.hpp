#ifndef EDGECERT_COMPLEX_HPP_
#define EDGECERT_COMPLEX_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edgecert {

/// Sorted vertex indices of one simplex.
using Simplex = std::vector<std::size_t>;

/// Edge as (i, j) with i < j, in vertex-index terms.
using Edge = std::pair<std::size_t, std::size_t>;

struct SimplexPair {
  Simplex first;
  Simplex second;

  friend bool operator==(const SimplexPair&, const SimplexPair&) = default;
};

/// Finite abstract simplicial complex. Vertices are ordered lexicographically
/// by label, edges lexicographically by their sorted index pair, simplices by
/// (size, vertex indices). These orderings never change after construction.
class SimplicialComplex {
 public:
  /// Builds the subset closure of the given maximal simplices. Throws
  /// std::invalid_argument for an empty list, an empty simplex, or a simplex
  /// with a repeated label.
  static SimplicialComplex from_maximal_simplices(std::vector<std::vector<std::string>> maximal);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t dimension() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const;

  /// All non-empty simplices.
  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::vector<Simplex> simplices_of_size(std::size_t k) const;
  bool contains(const Simplex& s) const;

  /// The maximal simplices exactly as given to the constructor.
  const std::vector<std::vector<std::string>>& input_simplices() const { return input_; }

  std::string format_simplex(const Simplex& s) const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  std::vector<Simplex> simplices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::string>> input_;
};

/// Unordered pairs of simplices with disjoint vertex sets. With
/// `maximal_only`, pairs (s, t) for which some disjoint pair (s', t') with
/// s ⊆ s', t ⊆ t' (not both equal) exists are dropped; this keeps the minimum
/// distance unchanged.
std::vector<SimplexPair> non_adjacent_pairs(const SimplicialComplex& c, bool maximal_only);

}  // namespace edgecert

#endif  // EDGECERT_COMPLEX_HPP_
