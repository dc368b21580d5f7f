#include "edgecert/singular_bounds.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace edgecert {

std::optional<double> float_min_singular_value(const RatMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return std::nullopt;
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j).to_double();
    }
  }
  if (!m.allFinite()) return std::nullopt;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& values = svd.singularValues();
  if (values.size() == 0 || !values.allFinite()) return std::nullopt;
  return values.minCoeff();
}

RatInterval sigma_min_bounds(const RatMatrix& a, int digits) {
  if (digits < 1) throw std::invalid_argument("sigma_min_bounds requires digits >= 1");
  const std::optional<double> estimate = float_min_singular_value(a);
  if (!estimate) throw CertificationError("no floating-point estimate of the smallest singular value");

  const RatMatrix b = gram(a);
  const Rational f = Rational::from_double(*estimate);
  const Rational step = pow10(-digits);
  constexpr int kMaxWidenings = 3;

  Rational lb = floor_to_places(f, digits);
  bool lb_ok = false;
  for (int attempt = 0; attempt <= kMaxWidenings; ++attempt) {
    if (lb.sign() <= 0) {
      lb = Rational(0);
      lb_ok = true;
      break;
    }
    if (is_positive_definite(b.minus_scaled_identity(lb * lb))) {
      lb_ok = true;
      break;
    }
    lb -= step;
  }
  if (!lb_ok) throw CertificationError("could not certify a lower bound on sigma_min");

  Rational ub = ceil_to_places(f, digits);
  if (ub.sign() < 0) ub = Rational(0);
  for (int attempt = 0; attempt <= kMaxWidenings; ++attempt) {
    if (!is_positive_definite(b.minus_scaled_identity(ub * ub))) return {lb, ub};
    ub += step;
  }
  throw CertificationError("could not certify an upper bound on sigma_min");
}

}  // namespace edgecert
