#include <cmath>
#include <set>

#include "doctest.h"
#include "edgecert/interval.hpp"
#include "edgecert/realization.hpp"
#include "test_support.hpp"

using namespace edgecert;
using edgecert::testing::load_fixture;
using edgecert::testing::R;
using edgecert::testing::RandomRationals;

namespace {

Point p(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

SimplicialComplex edge_complex() { return SimplicialComplex::from_maximal_simplices({{"a", "b"}}); }

SimplicialComplex triangle_boundary() {
  return SimplicialComplex::from_maximal_simplices({{"a", "b"}, {"b", "c"}, {"c", "a"}});
}

// Random complex on up to `max_vertices` vertices, all labels used.
SimplicialComplex random_complex(RandomRationals& rng, std::size_t max_vertices) {
  const std::size_t nv = 3 + rng.index(max_vertices - 2);
  std::vector<std::vector<std::string>> maximal;
  for (std::size_t v = 0; v < nv; ++v) maximal.push_back({"v" + std::to_string(v)});
  const std::size_t count = 2 + rng.index(5);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t size = 2 + rng.index(2);
    std::set<std::string> s;
    while (s.size() < size) s.insert("v" + std::to_string(rng.index(nv)));
    maximal.emplace_back(s.begin(), s.end());
  }
  return SimplicialComplex::from_maximal_simplices(maximal);
}

Realization random_realization(RandomRationals& rng, const SimplicialComplex& c, std::size_t dim) {
  return Realization(c, dim, rng.points(c.num_vertices(), dim, 50, 7));
}

std::vector<double> float_lengths(const SimplicialComplex& c, const std::vector<double>& x, std::size_t dim) {
  std::vector<double> out;
  for (const auto& [i, j] : c.edges()) {
    double s = 0.0;
    for (std::size_t k = 0; k < dim; ++k) s += (x[i * dim + k] - x[j * dim + k]) * (x[i * dim + k] - x[j * dim + k]);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("squared length examples") {
  CHECK(squared_lengths(Realization(edge_complex(), 2, {p({0, 0}), p({1, 0})})) == std::vector<Rational>{Rational(1)});
  CHECK(squared_lengths(Realization(edge_complex(), 2, {p({3, 3}), p({3, 3})})) == std::vector<Rational>{Rational(0)});
  // Edge order: (a,b), (a,c), (b,c).
  const Realization tri(triangle_boundary(), 2, {p({0, 0}), p({3, 0}), p({0, 4})});
  CHECK(squared_lengths(tri) == std::vector<Rational>{Rational(9), Rational(16), Rational(25)});
}

TEST_CASE("realization validation") {
  CHECK_THROWS_AS(Realization(edge_complex(), 2, {p({0, 0})}), std::invalid_argument);
  CHECK_THROWS_AS(Realization(edge_complex(), 2, {p({0, 0}), p({1, 0, 0})}), std::invalid_argument);
  CHECK_THROWS_AS(Realization(edge_complex(), 0, {Point{}, Point{}}), std::invalid_argument);
  CHECK_THROWS_AS(Realization::from_labels(edge_complex(), 1, {{"a", p({0})}}), std::invalid_argument);
  CHECK_THROWS_AS(Realization::from_labels(edge_complex(), 1, {{"a", p({0})}, {"b", p({1})}, {"z", p({2})}}),
                  std::invalid_argument);
  const Realization r = Realization::from_labels(edge_complex(), 1, {{"a", p({0})}, {"b", p({5})}});
  CHECK(r.coord("b") == p({5}));
  CHECK(r.with_vertex(0, p({1})).coord("a") == p({1}));
}

TEST_CASE("squared length targets") {
  SquaredLengthSpec spec;
  spec.set("b", "a", Rational(1));
  CHECK_THROWS(spec.set("a", "b", Rational(2)));
  CHECK_THROWS(spec.set("a", "a", Rational(2)));
  CHECK_THROWS(spec.set("a", "c", Rational(0)));
  CHECK_THROWS(spec.set_default(R("-1")));
  const auto c = triangle_boundary();
  CHECK_THROWS(spec.resolve(c));
  spec.set_default(R("1/4"));
  CHECK(spec.resolve(c) == std::vector<Rational>{Rational(1), R("1/4"), R("1/4")});
  SquaredLengthSpec bad;
  bad.set("a", "z", Rational(1));
  bad.set_default(Rational(1));
  CHECK_THROWS(bad.resolve(c));
}

TEST_CASE("Jacobian examples") {
  const RatMatrix j = length_jacobian(Realization(edge_complex(), 2, {p({0, 0}), p({1, 0})}));
  CHECK(j == RatMatrix::from_rows({{Rational(-2), Rational(0), Rational(2), Rational(0)}}));

  RandomRationals rng(41);
  const auto c = random_complex(rng, 6);
  const RatMatrix jr = length_jacobian(random_realization(rng, c, 3));
  CHECK(jr.rows() == c.num_edges());
  CHECK(jr.cols() == 3 * c.num_vertices());
  for (std::size_t e = 0; e < jr.rows(); ++e) {
    for (std::size_t k = 0; k < 3; ++k) {
      Rational axis_sum;
      for (std::size_t v = 0; v < c.num_vertices(); ++v) axis_sum += jr(e, v * 3 + k);
      CHECK(axis_sum.is_zero());
    }
  }
}

TEST_CASE("Jacobian matches central finite differences") {
  RandomRationals rng(42);
  constexpr double h = 1e-6;
  for (int inst = 0; inst < 50; ++inst) {
    const auto c = random_complex(rng, 6);
    const std::size_t dim = 1 + rng.index(4);
    const Realization r = random_realization(rng, c, dim);
    const RatMatrix j = length_jacobian(r);
    std::vector<double> x;
    for (const auto& pt : r.coords()) {
      for (const auto& v : pt) x.push_back(v.to_double());
    }
    double worst = 0.0;
    for (std::size_t col = 0; col < x.size(); ++col) {
      auto plus = x;
      auto minus = x;
      plus[col] += h;
      minus[col] -= h;
      const auto lp = float_lengths(c, plus, dim);
      const auto lm = float_lengths(c, minus, dim);
      for (std::size_t e = 0; e < lp.size(); ++e) {
        const double fd = (lp[e] - lm[e]) / (2 * h);
        const double exact = j(e, col).to_double();
        const double scale = std::max(1.0, std::abs(exact));
        worst = std::max(worst, std::abs(fd - exact) / scale);
      }
    }
    CHECK(worst < 1e-4);
  }
}

TEST_CASE("Taylor remainder of the squared-length map is exact") {
  RandomRationals rng(43);
  for (int inst = 0; inst < 50; ++inst) {
    const auto c = random_complex(rng, 6);
    const std::size_t dim = 1 + rng.index(3);
    const Realization alpha = random_realization(rng, c, dim);
    std::vector<Point> moved = alpha.coords();
    std::vector<Point> eps;
    std::vector<Rational> flat;
    for (auto& pt : moved) {
      eps.push_back(rng.point(dim, 10, 9));
      for (std::size_t k = 0; k < dim; ++k) {
        pt[k] += eps.back()[k];
        flat.push_back(eps.back()[k]);
      }
    }
    const Realization shifted(c, dim, moved);
    const auto before = squared_lengths(alpha);
    const auto after = squared_lengths(shifted);
    const auto linear = matvec(length_jacobian(alpha), flat);
    for (std::size_t e = 0; e < c.num_edges(); ++e) {
      const auto [i, j] = c.edges()[e];
      const Rational remainder = after[e] - before[e] - linear[e];
      CHECK(remainder == squared_norm_difference(eps[i], eps[j]));
    }
  }
}

TEST_CASE("collision distance examples") {
  const auto tri = load_fixture("triangle_30_60_90").realization();
  const CollisionDistance cd = collision_distance_squared(tri);
  CHECK(cd.squared == R("18749999713556450281734401664681/99999999862479730000000000000000"));
  const RatInterval tri_iv = sqrt_bounds(*cd.squared);
  CHECK(std::abs(tri_iv.lo().to_double() - 0.43301) < 1e-5);
  CHECK(std::abs(tri_iv.hi().to_double() - 0.43301) < 1e-5);

  const CollisionDistance ico = collision_distance_squared(load_fixture("icosahedron").realization());
  const RatInterval ico_iv = sqrt_bounds(*ico.squared);
  CHECK(std::abs(ico_iv.lo().to_double() - 0.85065) < 1e-5);
  CHECK(std::abs(ico_iv.hi().to_double() - 0.85065) < 1e-5);

  const auto two = SimplicialComplex::from_maximal_simplices({{"a", "b"}, {"c", "d"}});
  // Endpoints of one unit segment are themselves a disjoint pair.
  const Realization segs(two, 2, {p({0, 0}), p({1, 0}), p({0, 2}), p({1, 2})});
  CHECK(collision_distance_squared(segs).squared == Rational(1));
  const Realization long_segs(two, 2, {p({0, 0}), p({3, 0}), p({0, 2}), p({3, 2})});
  const CollisionDistance far = collision_distance_squared(long_segs);
  CHECK(far.squared == Rational(4));
}

TEST_CASE("self-intersection examples") {
  CHECK_FALSE(is_self_intersecting(load_fixture("triangle_30_60_90").realization()));
  const auto bowtie = SimplicialComplex::from_maximal_simplices({{"a", "b", "c"}, {"d", "e", "f"}});
  const Realization crossing(bowtie, 2, {p({0, 0}), p({4, 0}), p({0, 4}), p({1, 1}), p({5, 1}), p({1, 5})});
  CHECK(is_self_intersecting(crossing));
  CHECK(collision_distance_squared(crossing).squared == Rational(0));
  const auto lone = SimplicialComplex::from_maximal_simplices({{"a", "b", "c"}});
  const Realization solo(lone, 2, {p({0, 0}), p({1, 0}), p({0, 1})});
  CHECK(collision_distance_squared(solo).unconstrained() == false);
  const auto point = SimplicialComplex::from_maximal_simplices({{"a"}});
  CHECK(collision_distance_squared(Realization(point, 2, {p({0, 0})})).unconstrained());
  CHECK_FALSE(is_self_intersecting(Realization(point, 2, {p({0, 0})})));
}

TEST_CASE("collision distance is 1-Lipschitz in single-vertex moves") {
  RandomRationals rng(44);
  int checked = 0;
  while (checked < 50) {
    const auto c = random_complex(rng, 6);
    const Realization r = random_realization(rng, c, 3);
    const CollisionDistance before = collision_distance_squared(r);
    if (before.unconstrained()) continue;
    const std::size_t v = rng.index(c.num_vertices());
    const Point delta = rng.point(3, 10, 7);
    Point moved = r.coord(v);
    for (std::size_t k = 0; k < 3; ++k) moved[k] += delta[k];
    const CollisionDistance after = collision_distance_squared(r.with_vertex(v, moved));
    const RatInterval cd_old = sqrt_bounds(*before.squared);
    const RatInterval cd_new = sqrt_bounds(*after.squared);
    const RatInterval move = sqrt_bounds(squared_norm_difference(delta, Point(3)));
    CHECK(cd_new.hi() >= cd_old.lo() - move.hi());
    CHECK(cd_old.hi() >= cd_new.lo() - move.hi());
    ++checked;
  }
}

TEST_CASE("collision distance is translation invariant") {
  RandomRationals rng(45);
  for (int i = 0; i < 20; ++i) {
    const auto c = random_complex(rng, 6);
    const Realization r = random_realization(rng, c, 3);
    const Point t = rng.point(3);
    std::vector<Point> shifted = r.coords();
    for (auto& pt : shifted) {
      for (std::size_t k = 0; k < 3; ++k) pt[k] += t[k];
    }
    CHECK(collision_distance_squared(Realization(c, 3, shifted)).squared == collision_distance_squared(r).squared);
  }
}

TEST_CASE("maximal-pair filtering preserves the minimum") {
  RandomRationals rng(46);
  for (int i = 0; i < 60; ++i) {
    const auto c = random_complex(rng, 6);
    const std::size_t dim = 1 + rng.index(3);
    const Realization r = random_realization(rng, c, dim);
    const auto maximal = collision_distance_squared(r, true);
    const auto all = collision_distance_squared(r, false);
    CHECK(maximal.squared == all.squared);
    CHECK(maximal.pairs_checked <= all.pairs_checked);
  }
}
