#ifndef EDGECERT_LCP_HPP_
#define EDGECERT_LCP_HPP_

#include <cstddef>
#include <vector>

#include "edgecert/matrix.hpp"
#include "edgecert/rational.hpp"

namespace edgecert {

/// Find z >= 0 with w = M z + q >= 0 and z^T w = 0.
struct LcpProblem {
  RatMatrix m;
  std::vector<Rational> q;

  std::size_t size() const { return q.size(); }
};

enum class LcpStatus { kSolved, kRayTermination, kInfeasible };

const char* to_string(LcpStatus s);

struct LcpSolution {
  std::vector<Rational> z;
  std::vector<Rational> w;
  LcpStatus status = LcpStatus::kRayTermination;
  std::size_t pivots = 0;
};

/// Lemke's complementary pivoting with covering vector (1, ..., 1) and a
/// lexicographic ratio test, carried out in exact arithmetic. On kSolved the
/// complementarity conditions hold exactly. Throws DimensionError for a
/// malformed problem and std::logic_error if the pivot budget is exhausted.
LcpSolution lemke_solve(const LcpProblem& problem);

/// True iff z, w satisfy the LCP conditions for `problem` exactly.
bool is_complementary_solution(const LcpProblem& problem, const std::vector<Rational>& z,
                               const std::vector<Rational>& w);

}  // namespace edgecert

#endif  // EDGECERT_LCP_HPP_
