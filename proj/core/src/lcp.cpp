#include "edgecert/lcp.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace edgecert {

namespace {

// Tableau rows hold B^-1 [I | -M | -e | q]. Variable j < n is w_j, n <= j < 2n
// is z_{j-n}, and 2n is the artificial z0. The first n columns are B^-1, which
// is what the lexicographic tie-break compares.
class LemkeTableau {
 public:
  explicit LemkeTableau(const LcpProblem& p) : n_(p.size()), rows_(n_), basis_(n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      auto& row = rows_[i];
      row.resize(2 * n_ + 2);
      row[i] = Rational(1);
      for (std::size_t j = 0; j < n_; ++j) row[n_ + j] = -p.m(i, j);
      row[2 * n_] = Rational(-1);
      row[2 * n_ + 1] = p.q[i];
      basis_[i] = i;
    }
  }

  std::size_t artificial() const { return 2 * n_; }
  std::size_t rhs() const { return 2 * n_ + 1; }
  std::size_t complement(std::size_t var) const { return var < n_ ? var + n_ : var - n_; }

  // Row of the initial pivot: the most negative q, ties to the largest index
  // so that every row of [q | B^-1] is lexicographically positive afterwards.
  std::size_t initial_row() const {
    std::size_t r = 0;
    for (std::size_t i = 1; i < n_; ++i) {
      if (rows_[i][rhs()] <= rows_[r][rhs()]) r = i;
    }
    return r;
  }

  // Lexicographic minimum ratio test on column c; nullopt on a ray.
  std::optional<std::size_t> ratio_row(std::size_t c) const {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < n_; ++i) {
      if (rows_[i][c].sign() <= 0) continue;
      if (!best) {
        best = i;
        continue;
      }
      const std::size_t b = *best;
      const Rational lhs = rows_[i][rhs()] * rows_[b][c];
      const Rational rhs_value = rows_[b][rhs()] * rows_[i][c];
      if (lhs < rhs_value) {
        best = i;
      } else if (lhs == rhs_value) {
        if (basis_[b] == artificial()) continue;
        if (basis_[i] == artificial() || lex_less(i, b, c)) best = i;
      }
    }
    return best;
  }

  std::size_t pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const Rational inv = Rational(1) / prow[c];
    for (auto& v : prow) {
      if (!v.is_zero()) v *= inv;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == r || rows_[i][c].is_zero()) continue;
      const Rational factor = rows_[i][c];
      auto& row = rows_[i];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (!prow[j].is_zero()) row[j] -= factor * prow[j];
      }
    }
    const std::size_t leaving = basis_[r];
    basis_[r] = c;
    return leaving;
  }

  std::vector<Rational> z_values() const {
    std::vector<Rational> z(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (basis_[i] >= n_ && basis_[i] < 2 * n_) z[basis_[i] - n_] = rows_[i][rhs()];
    }
    return z;
  }

 private:
  // Row i / a_ic lexicographically below row b / a_bc over the B^-1 columns.
  bool lex_less(std::size_t i, std::size_t b, std::size_t c) const {
    for (std::size_t j = 0; j < n_; ++j) {
      const Rational lhs = rows_[i][j] * rows_[b][c];
      const Rational rhs_value = rows_[b][j] * rows_[i][c];
      if (lhs != rhs_value) return lhs < rhs_value;
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
};

std::vector<Rational> residual(const LcpProblem& p, const std::vector<Rational>& z) {
  std::vector<Rational> w = matvec(p.m, z);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += p.q[i];
  return w;
}

}  // namespace

const char* to_string(LcpStatus s) {
  switch (s) {
    case LcpStatus::kSolved:
      return "solved";
    case LcpStatus::kRayTermination:
      return "ray termination";
    case LcpStatus::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

LcpSolution lemke_solve(const LcpProblem& problem) {
  const std::size_t n = problem.size();
  if (problem.m.rows() != n || problem.m.cols() != n) {
    throw DimensionError("LCP matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }

  LcpSolution out;
  bool q_nonnegative = true;
  for (const auto& v : problem.q) q_nonnegative = q_nonnegative && v.sign() >= 0;
  if (q_nonnegative) {
    out.z.assign(n, Rational(0));
    out.w = problem.q;
    out.status = LcpStatus::kSolved;
    return out;
  }

  LemkeTableau tableau(problem);
  std::size_t leaving = tableau.pivot(tableau.initial_row(), tableau.artificial());
  out.pivots = 1;
  const std::size_t budget = 1000 + 50 * n * n;
  while (out.pivots < budget) {
    const std::size_t entering = tableau.complement(leaving);
    const std::optional<std::size_t> row = tableau.ratio_row(entering);
    if (!row) {
      out.status = LcpStatus::kRayTermination;
      return out;
    }
    leaving = tableau.pivot(*row, entering);
    ++out.pivots;
    if (leaving == tableau.artificial()) {
      out.z = tableau.z_values();
      out.w = residual(problem, out.z);
      out.status = LcpStatus::kSolved;
      if (!is_complementary_solution(problem, out.z, out.w)) {
        throw std::logic_error("Lemke terminated with a non-complementary point");
      }
      return out;
    }
  }
  throw std::logic_error("Lemke pivot budget exhausted (cycling)");
}

bool is_complementary_solution(const LcpProblem& problem, const std::vector<Rational>& z,
                               const std::vector<Rational>& w) {
  const std::size_t n = problem.size();
  if (z.size() != n || w.size() != n) return false;
  const std::vector<Rational> expected = residual(problem, z);
  Rational dot;
  for (std::size_t i = 0; i < n; ++i) {
    if (z[i].sign() < 0 || w[i].sign() < 0 || w[i] != expected[i]) return false;
    dot += z[i] * w[i];
  }
  return dot.is_zero();
}

}  // namespace edgecert
