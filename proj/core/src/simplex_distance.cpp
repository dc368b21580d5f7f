#include "edgecert/simplex_distance.hpp"

#include "edgecert/matrix.hpp"
#include "edgecert/qp.hpp"

namespace edgecert {

namespace {

std::size_t common_dimension(const std::vector<Point>& x, const std::vector<Point>& y) {
  if (x.empty() || y.empty()) throw DimensionError("simplex vertex lists must be non-empty");
  const std::size_t d = x.front().size();
  for (const auto* list : {&x, &y}) {
    for (const auto& p : *list) {
      if (p.size() != d) throw DimensionError("simplex vertices have mixed dimensions");
    }
  }
  return d;
}

// Rows encoding sum(alpha) = 1 and sum(beta) = 1 as paired inequalities.
void add_barycentric_rows(RatMatrix& a, std::vector<Rational>& b, std::size_t first_row,
                          std::size_t m, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    a(first_row, i) = Rational(1);
    a(first_row + 1, i) = Rational(-1);
  }
  for (std::size_t j = 0; j < n; ++j) {
    a(first_row + 2, m + j) = Rational(1);
    a(first_row + 3, m + j) = Rational(-1);
  }
  b[first_row] = Rational(1);
  b[first_row + 1] = Rational(-1);
  b[first_row + 2] = Rational(1);
  b[first_row + 3] = Rational(-1);
}

}  // namespace

Point barycentric_point(const std::vector<Point>& vertices, const std::vector<Rational>& weights) {
  if (vertices.size() != weights.size() || vertices.empty()) {
    throw DimensionError("barycentric weights do not match vertex count");
  }
  Point p(vertices.front().size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (weights[i].is_zero()) continue;
    for (std::size_t k = 0; k < p.size(); ++k) p[k] += weights[i] * vertices[i][k];
  }
  return p;
}

Rational squared_norm_difference(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DimensionError("points have different dimensions");
  Rational s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Rational diff = a[k] - b[k];
    s += diff * diff;
  }
  return s;
}

SimplexDistance simplex_square_distance(const std::vector<Point>& x, const std::vector<Point>& y) {
  const std::size_t d = common_dimension(x, y);
  const std::size_t m = x.size();
  const std::size_t n = y.size();

  // Columns are (x_1..x_m, -y_1..-y_n); the objective is 1/2 v^T (2 G) v
  // with G the Gram matrix of those columns.
  std::vector<Point> columns;
  columns.reserve(m + n);
  for (const auto& p : x) columns.push_back(p);
  for (const auto& p : y) {
    Point neg(d);
    for (std::size_t k = 0; k < d; ++k) neg[k] = -p[k];
    columns.push_back(std::move(neg));
  }

  QpProblem qp{RatMatrix(m + n, m + n), std::vector<Rational>(m + n), RatMatrix(4, m + n),
               std::vector<Rational>(4)};
  for (std::size_t i = 0; i < m + n; ++i) {
    for (std::size_t j = i; j < m + n; ++j) {
      Rational dot;
      for (std::size_t k = 0; k < d; ++k) dot += columns[i][k] * columns[j][k];
      qp.h(i, j) = dot * Rational(2);
      qp.h(j, i) = qp.h(i, j);
    }
  }
  add_barycentric_rows(qp.a, qp.b, 0, m, n);

  const QpSolution sol = solve_qp(qp);
  if (sol.status != QpStatus::kOptimal) {
    throw SolverError("Lemke ray termination on a simplex distance problem");
  }

  SimplexDistance out;
  out.alpha.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(m));
  out.beta.assign(sol.x.begin() + static_cast<std::ptrdiff_t>(m), sol.x.end());
  out.closest_first = barycentric_point(x, out.alpha);
  out.closest_second = barycentric_point(y, out.beta);
  out.squared_distance = squared_norm_difference(out.closest_first, out.closest_second);
  return out;
}

bool simplices_intersect(const std::vector<Point>& x, const std::vector<Point>& y) {
  const std::size_t d = common_dimension(x, y);
  const std::size_t m = x.size();
  const std::size_t n = y.size();

  // sum a_i x_i - sum b_j y_j = 0 as 2d inequalities, plus the two sums.
  QpProblem lp{RatMatrix(m + n, m + n), std::vector<Rational>(m + n), RatMatrix(2 * d + 4, m + n),
               std::vector<Rational>(2 * d + 4)};
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      lp.a(2 * k, i) = x[i][k];
      lp.a(2 * k + 1, i) = -x[i][k];
    }
    for (std::size_t j = 0; j < n; ++j) {
      lp.a(2 * k, m + j) = -y[j][k];
      lp.a(2 * k + 1, m + j) = y[j][k];
    }
  }
  add_barycentric_rows(lp.a, lp.b, 2 * d, m, n);
  return solve_qp(lp).status == QpStatus::kOptimal;
}

}  // namespace edgecert
