#ifndef EDGECERT_QP_HPP_
#define EDGECERT_QP_HPP_

#include <vector>

#include "edgecert/lcp.hpp"
#include "edgecert/matrix.hpp"

namespace edgecert {

/// minimize 1/2 x^T H x + c^T x  subject to  A x >= b,  x >= 0.
/// H must be symmetric; convexity (H PSD) is the caller's responsibility.
struct QpProblem {
  RatMatrix h;
  std::vector<Rational> c;
  RatMatrix a;
  std::vector<Rational> b;

  std::size_t num_variables() const { return h.rows(); }
  std::size_t num_constraints() const { return a.rows(); }
};

enum class QpStatus { kOptimal, kInfeasibleOrUnbounded };

struct QpSolution {
  QpStatus status = QpStatus::kInfeasibleOrUnbounded;
  std::vector<Rational> x;
  std::vector<Rational> multipliers;
  Rational objective;
};

/// KKT encoding: z = (x, lambda), M = [[H, -A^T], [A, 0]], q = (c, -b).
LcpProblem qp_to_lcp(const QpProblem& qp);

/// Solves a convex QP through qp_to_lcp and lemke_solve. For PSD H the LCP
/// matrix is copositive-plus, so ray termination means no KKT point exists.
QpSolution solve_qp(const QpProblem& qp);

Rational qp_objective(const QpProblem& qp, const std::vector<Rational>& x);
bool qp_is_feasible(const QpProblem& qp, const std::vector<Rational>& x);

}  // namespace edgecert

#endif  // EDGECERT_QP_HPP_
