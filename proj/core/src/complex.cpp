#include "edgecert/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace edgecert {

namespace {

constexpr std::size_t kMaxSimplexSize = 20;

bool simplex_order(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool disjoint(const Simplex& a, const Simplex& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

Simplex with_vertex(const Simplex& s, std::size_t v) {
  Simplex out = s;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal_simplices(std::vector<std::vector<std::string>> maximal) {
  if (maximal.empty()) throw std::invalid_argument("complex needs at least one simplex");
  SimplicialComplex c;
  std::set<std::string> label_set;
  for (const auto& s : maximal) {
    if (s.empty()) throw std::invalid_argument("empty simplex in complex description");
    if (s.size() > kMaxSimplexSize) throw std::invalid_argument("simplex has too many vertices");
    const std::set<std::string> unique(s.begin(), s.end());
    if (unique.size() != s.size()) throw std::invalid_argument("simplex repeats a vertex label");
    label_set.insert(s.begin(), s.end());
  }
  c.labels_.assign(label_set.begin(), label_set.end());
  for (std::size_t i = 0; i < c.labels_.size(); ++i) c.index_[c.labels_[i]] = i;

  std::set<Simplex> closure;
  for (const auto& s : maximal) {
    Simplex verts;
    for (const auto& l : s) verts.push_back(c.index_.at(l));
    std::sort(verts.begin(), verts.end());
    const std::size_t k = verts.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      Simplex face;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask & (std::size_t{1} << b)) face.push_back(verts[b]);
      }
      closure.insert(std::move(face));
    }
  }
  c.simplices_.assign(closure.begin(), closure.end());
  std::sort(c.simplices_.begin(), c.simplices_.end(), simplex_order);
  for (const auto& s : c.simplices_) {
    if (s.size() == 2) c.edges_.emplace_back(s[0], s[1]);
  }
  std::sort(c.edges_.begin(), c.edges_.end());
  c.input_ = std::move(maximal);
  return c;
}

std::size_t SimplicialComplex::dimension() const {
  return simplices_.empty() ? 0 : simplices_.back().size() - 1;
}

std::optional<std::size_t> SimplicialComplex::index_of(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SimplicialComplex::edge_index(std::size_t a, std::size_t b) const {
  const Edge e = a < b ? Edge{a, b} : Edge{b, a};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<Simplex> SimplicialComplex::simplices_of_size(std::size_t k) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    if (s.size() == k) out.push_back(s);
  }
  return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return std::binary_search(simplices_.begin(), simplices_.end(), s, simplex_order);
}

std::string SimplicialComplex::format_simplex(const Simplex& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += labels_.at(s[i]);
  }
  return out + "}";
}

std::vector<SimplexPair> non_adjacent_pairs(const SimplicialComplex& c, bool maximal_only) {
  const auto& simplices = c.simplices();
  const std::size_t nv = c.num_vertices();

  // A disjoint pair is maximal iff neither side extends by a vertex outside
  // both sides.
  auto extendable = [&](const Simplex& s, const Simplex& other) {
    for (std::size_t v = 0; v < nv; ++v) {
      if (std::binary_search(s.begin(), s.end(), v) || std::binary_search(other.begin(), other.end(), v)) {
        continue;
      }
      if (c.contains(with_vertex(s, v))) return true;
    }
    return false;
  };

  std::vector<SimplexPair> out;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    for (std::size_t j = i + 1; j < simplices.size(); ++j) {
      const Simplex& s = simplices[i];
      const Simplex& t = simplices[j];
      if (!disjoint(s, t)) continue;
      if (maximal_only && (extendable(s, t) || extendable(t, s))) continue;
      out.push_back({s, t});
    }
  }
  return out;
}

}  // namespace edgecert
