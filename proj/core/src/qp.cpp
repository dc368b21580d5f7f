#include "edgecert/qp.hpp"

#include <string>

namespace edgecert {

namespace {

void validate(const QpProblem& qp) {
  const std::size_t n = qp.num_variables();
  if (!qp.h.is_square()) throw DimensionError("QP objective matrix must be square");
  if (!qp.h.is_symmetric()) throw DimensionError("QP objective matrix must be symmetric");
  if (qp.c.size() != n) throw DimensionError("QP linear term has wrong length");
  if (qp.a.rows() != qp.b.size()) throw DimensionError("QP constraint rows and rhs differ in length");
  if (qp.a.rows() > 0 && qp.a.cols() != n) {
    throw DimensionError("QP constraint matrix has " + std::to_string(qp.a.cols()) +
                         " columns, expected " + std::to_string(n));
  }
}

}  // namespace

LcpProblem qp_to_lcp(const QpProblem& qp) {
  validate(qp);
  const std::size_t n = qp.num_variables();
  const std::size_t k = qp.num_constraints();
  LcpProblem lcp{RatMatrix(n + k, n + k), std::vector<Rational>(n + k)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lcp.m(i, j) = qp.h(i, j);
    lcp.q[i] = qp.c[i];
  }
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      lcp.m(n + r, j) = qp.a(r, j);
      lcp.m(j, n + r) = -qp.a(r, j);
    }
    lcp.q[n + r] = -qp.b[r];
  }
  return lcp;
}

QpSolution solve_qp(const QpProblem& qp) {
  const LcpProblem lcp = qp_to_lcp(qp);
  const LcpSolution sol = lemke_solve(lcp);
  QpSolution out;
  if (sol.status != LcpStatus::kSolved) return out;
  const std::size_t n = qp.num_variables();
  out.status = QpStatus::kOptimal;
  out.x.assign(sol.z.begin(), sol.z.begin() + static_cast<std::ptrdiff_t>(n));
  out.multipliers.assign(sol.z.begin() + static_cast<std::ptrdiff_t>(n), sol.z.end());
  out.objective = qp_objective(qp, out.x);
  return out;
}

Rational qp_objective(const QpProblem& qp, const std::vector<Rational>& x) {
  const std::vector<Rational> hx = matvec(qp.h, x);
  Rational quad;
  Rational lin;
  for (std::size_t i = 0; i < x.size(); ++i) {
    quad += x[i] * hx[i];
    lin += qp.c[i] * x[i];
  }
  return quad / Rational(2) + lin;
}

bool qp_is_feasible(const QpProblem& qp, const std::vector<Rational>& x) {
  for (const auto& v : x) {
    if (v.sign() < 0) return false;
  }
  if (qp.num_constraints() == 0) return true;
  const std::vector<Rational> ax = matvec(qp.a, x);
  for (std::size_t r = 0; r < ax.size(); ++r) {
    if (ax[r] < qp.b[r]) return false;
  }
  return true;
}

}  // namespace edgecert
