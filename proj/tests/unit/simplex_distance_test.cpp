#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "edgecert/simplex_distance.hpp"
#include "test_support.hpp"

using namespace edgecert;
using edgecert::testing::R;
using edgecert::testing::RandomRationals;

namespace {

Point p(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<Point> translate(const std::vector<Point>& xs, const Point& t) {
  std::vector<Point> out = xs;
  for (auto& x : out) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += t[k];
  }
  return out;
}

std::vector<Point> scale(const std::vector<Point>& xs, const Rational& s) {
  std::vector<Point> out = xs;
  for (auto& x : out) {
    for (auto& c : x) c *= s;
  }
  return out;
}

// Barycentric grid on a simplex of 1..3 vertices with `steps` subdivisions.
std::vector<std::vector<double>> grid_weights(std::size_t n, int steps) {
  std::vector<std::vector<double>> out;
  if (n == 1) return {{1.0}};
  if (n == 2) {
    for (int i = 0; i <= steps; ++i) out.push_back({1.0 - double(i) / steps, double(i) / steps});
    return out;
  }
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; i + j <= steps; ++j) {
      out.push_back({double(i) / steps, double(j) / steps, double(steps - i - j) / steps});
    }
  }
  return out;
}

std::vector<double> combine(const std::vector<Point>& xs, const std::vector<double>& w) {
  std::vector<double> out(xs.front().size(), 0.0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += w[i] * xs[i][k].to_double();
  }
  return out;
}

}  // namespace

TEST_CASE("distance examples") {
  const SimplexDistance tri = simplex_square_distance({p({3, 0, 0}), p({0, 3, 0}), p({0, 0, 3})},
                                                      {p({0, 1, 1}), p({1, 0, 1})});
  CHECK(tri.squared_distance == R("1/3"));
  CHECK(tri.closest_first == Point{R("1/3"), R("4/3"), R("4/3")});
  CHECK(tri.closest_second == p({0, 1, 1}));

  CHECK(simplex_square_distance({p({0, 0})}, {p({1, 0})}).squared_distance == Rational(1));
  CHECK(simplex_square_distance({p({0, 0}), p({2, 2})}, {p({0, 2}), p({2, 0})}).squared_distance == Rational(0));
  CHECK(simplex_square_distance({p({0, 0}), p({1, 0})}, {p({0, 2}), p({1, 2})}).squared_distance == Rational(4));
  CHECK(simplex_square_distance({p({5, 5, 5})}, {p({5, 5, 5})}).squared_distance == Rational(0));
}

TEST_CASE("distance witnesses are consistent") {
  RandomRationals rng(31);
  for (int i = 0; i < 40; ++i) {
    const auto x = rng.points(1 + rng.index(3), 3);
    const auto y = rng.points(1 + rng.index(3), 3);
    const SimplexDistance d = simplex_square_distance(x, y);
    CHECK(d.closest_first == barycentric_point(x, d.alpha));
    CHECK(d.closest_second == barycentric_point(y, d.beta));
    CHECK(squared_norm_difference(d.closest_first, d.closest_second) == d.squared_distance);
    Rational sa, sb;
    for (const auto& a : d.alpha) {
      CHECK(a.sign() >= 0);
      sa += a;
    }
    for (const auto& b : d.beta) {
      CHECK(b.sign() >= 0);
      sb += b;
    }
    CHECK(sa == Rational(1));
    CHECK(sb == Rational(1));
  }
}

TEST_CASE("dimension errors") {
  CHECK_THROWS_AS(simplex_square_distance({p({0, 0})}, {p({1, 0, 0})}), DimensionError);
  CHECK_THROWS_AS(simplex_square_distance({}, {p({1, 0})}), DimensionError);
}

TEST_CASE("intersection test examples") {
  CHECK_FALSE(simplices_intersect({p({0, 0})}, {p({1, 0})}));
  CHECK(simplices_intersect({p({0, 0}), p({2, 2})}, {p({0, 2}), p({2, 0})}));
  CHECK_FALSE(simplices_intersect({p({3, 0, 0}), p({0, 3, 0}), p({0, 0, 3})}, {p({0, 1, 1}), p({1, 0, 1})}));
  CHECK(simplices_intersect({p({0, 0}), p({4, 0}), p({0, 4})}, {p({1, 1})}));
}

TEST_CASE("exact distance is below a 200x200 barycentric grid") {
  RandomRationals rng(32);
  for (int inst = 0; inst < 12; ++inst) {
    const std::size_t m = 1 + rng.index(3);
    const std::size_t n = 2;
    const auto x = rng.points(m, 3, 10, 3);
    const auto y = rng.points(n, 3, 10, 3);
    const double exact = simplex_square_distance(x, y).squared_distance.to_double();
    const int steps = m == 3 ? 100 : 200;
    double best = INFINITY;
    for (const auto& a : grid_weights(m, steps)) {
      const auto px = combine(x, a);
      for (const auto& b : grid_weights(n, steps)) {
        const auto py = combine(y, b);
        double s = 0.0;
        for (std::size_t k = 0; k < 3; ++k) s += (px[k] - py[k]) * (px[k] - py[k]);
        best = std::min(best, s);
      }
    }
    CHECK(exact <= best + 1e-9);
    // Grid resolution bound: within a few cells of the true optimum.
    double diam = 0.0;
    for (const auto* list : {&x, &y}) {
      for (const auto& u : *list) {
        for (const auto& v : *list) diam = std::max(diam, squared_norm_difference(u, v).to_double());
      }
    }
    const double cell = std::sqrt(diam) * 2.0 / steps;
    CHECK(std::sqrt(best) - std::sqrt(exact) <= 2.0 * cell + 1e-9);
  }
}

TEST_CASE("symmetry, translation and scaling") {
  RandomRationals rng(33);
  for (int i = 0; i < 40; ++i) {
    const auto x = rng.points(1 + rng.index(3), 3);
    const auto y = rng.points(1 + rng.index(3), 3);
    const Rational d = simplex_square_distance(x, y).squared_distance;
    CHECK(simplex_square_distance(y, x).squared_distance == d);
    const Point t = rng.point(3);
    CHECK(simplex_square_distance(translate(x, t), translate(y, t)).squared_distance == d);
    const Rational s = rng.non_negative(9, 4) + R("1/7");
    CHECK(simplex_square_distance(scale(x, s), scale(y, s)).squared_distance == d * s * s);
  }
}

TEST_CASE("intersection agrees with zero distance") {
  RandomRationals rng(34);
  int hits = 0;
  for (int i = 0; i < 80; ++i) {
    // 2D keeps overlaps frequent.
    const auto x = rng.points(1 + rng.index(3), 2, 4, 1);
    const auto y = rng.points(1 + rng.index(3), 2, 4, 1);
    const bool meet = simplices_intersect(x, y);
    hits += meet ? 1 : 0;
    CHECK(meet == simplex_square_distance(x, y).squared_distance.is_zero());
  }
  CHECK(hits > 0);
}
