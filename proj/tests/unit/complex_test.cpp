#include <algorithm>
#include <set>

#include "doctest.h"
#include "edgecert/complex.hpp"
#include "test_support.hpp"

using namespace edgecert;

namespace {

using Labels = std::vector<std::vector<std::string>>;

std::set<std::pair<std::string, std::string>> pair_names(const SimplicialComplex& c, bool maximal_only) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& p : non_adjacent_pairs(c, maximal_only)) {
    auto a = c.format_simplex(p.first);
    auto b = c.format_simplex(p.second);
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

}  // namespace

TEST_CASE("triangle boundary") {
  const auto c = SimplicialComplex::from_maximal_simplices({{"a", "b"}, {"b", "c"}, {"c", "a"}});
  CHECK(c.num_vertices() == 3);
  CHECK(c.num_edges() == 3);
  CHECK(c.simplices_of_size(3).empty());
  CHECK(c.dimension() == 1);
  CHECK(c.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(c.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("full 4-simplex") {
  const auto c = SimplicialComplex::from_maximal_simplices({{"a", "b", "c", "d", "e"}});
  CHECK(c.num_vertices() == 5);
  CHECK(c.num_edges() == 10);
  CHECK(c.simplices().size() == 31);
  CHECK(c.dimension() == 4);
  CHECK(c.contains(Simplex{0, 1, 2, 3, 4}));
}

TEST_CASE("icosahedron face list") {
  const auto d = edgecert::testing::load_fixture("icosahedron");
  const auto c = d.complex();
  CHECK(c.num_vertices() == 12);
  CHECK(c.num_edges() == 30);
  CHECK(c.simplices_of_size(3).size() == 20);
  CHECK(c.input_simplices() == d.data);
}

TEST_CASE("subset closure and lookup") {
  const auto c = SimplicialComplex::from_maximal_simplices({{"x", "y", "z"}, {"z", "w"}});
  CHECK(c.num_vertices() == 4);
  CHECK(c.num_edges() == 4);
  CHECK(c.index_of("w") == 0u);
  CHECK_FALSE(c.index_of("q").has_value());
  CHECK(c.edge_index(*c.index_of("z"), *c.index_of("w")).has_value());
  CHECK(c.edge_index(*c.index_of("w"), *c.index_of("z")) == c.edge_index(*c.index_of("z"), *c.index_of("w")));
  CHECK_FALSE(c.edge_index(*c.index_of("x"), *c.index_of("w")).has_value());
  CHECK(c.contains(Simplex{1, 2, 3}));
  CHECK_FALSE(c.contains(Simplex{0, 1}));
  // Simplices ordered by (size, indices).
  const auto& all = c.simplices();
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK((all[i - 1].size() < all[i].size() || (all[i - 1].size() == all[i].size() && all[i - 1] < all[i])));
  }
}

TEST_CASE("invalid complexes are rejected") {
  CHECK_THROWS_AS(SimplicialComplex::from_maximal_simplices({}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_maximal_simplices({{"a"}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_maximal_simplices({{"a", "a"}}), std::invalid_argument);
}

TEST_CASE("non-adjacent pairs of the triangle boundary") {
  const auto c = SimplicialComplex::from_maximal_simplices({{"a", "b"}, {"b", "c"}, {"c", "a"}});
  const std::set<std::pair<std::string, std::string>> expected{{"{a, b}", "{c}"}, {"{a}", "{b, c}"}, {"{a, c}", "{b}"}};
  CHECK(pair_names(c, true) == expected);
  // Without the filter, vertex-vertex pairs appear too.
  CHECK(pair_names(c, false).size() == 6);
}

TEST_CASE("single edge has one disjoint pair") {
  const auto c = SimplicialComplex::from_maximal_simplices({{"a", "b"}});
  const std::set<std::pair<std::string, std::string>> expected{{"{a}", "{b}"}};
  CHECK(pair_names(c, true) == expected);
}

TEST_CASE("4-simplex pairs split the vertex set") {
  const auto c = SimplicialComplex::from_maximal_simplices({{"a", "b", "c", "d", "e"}});
  const auto pairs = pair_names(c, true);
  CHECK(pairs.contains({"{a}", "{b, c, d, e}"}));
  CHECK(pairs.contains({"{a, b}", "{c, d, e}"}));
  // Maximal pairs partition all 5 vertices: 5 vertex-tetra + 10 edge-triangle.
  CHECK(pairs.size() == 15);
  for (const auto& p : non_adjacent_pairs(c, true)) CHECK(p.first.size() + p.second.size() == 5);
}

TEST_CASE("every enumerated pair is disjoint and ordered") {
  const auto c = edgecert::testing::load_fixture("icosahedron").complex();
  for (bool maximal : {true, false}) {
    for (const auto& p : non_adjacent_pairs(c, maximal)) {
      std::vector<std::size_t> common;
      std::set_intersection(p.first.begin(), p.first.end(), p.second.begin(), p.second.end(),
                            std::back_inserter(common));
      CHECK(common.empty());
      CHECK(c.contains(p.first));
      CHECK(c.contains(p.second));
    }
  }
  CHECK(non_adjacent_pairs(c, true).size() < non_adjacent_pairs(c, false).size());
}
