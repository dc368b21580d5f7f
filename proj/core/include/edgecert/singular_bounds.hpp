#ifndef EDGECERT_SINGULAR_BOUNDS_HPP_
#define EDGECERT_SINGULAR_BOUNDS_HPP_

#include <optional>

#include "edgecert/interval.hpp"
#include "edgecert/matrix.hpp"

namespace edgecert {

/// Decimal places used when rounding the floating seed of sigma_min.
inline constexpr int kDefaultSigmaDigits = 4;

/// Floating-point estimate of the smallest of the min(rows, cols) singular
/// values. Uncertified; nullopt for empty matrices or a failed SVD.
std::optional<double> float_min_singular_value(const RatMatrix& a);

/// Certified enclosure [lb, ub] of the smallest singular value of `a`.
///
/// The floating estimate is rounded down/up to `digits` decimals. With
/// B = gram(a), lb is accepted once B - lb^2 I is positive definite (or lb has
/// reached 0, which needs no proof) and ub once B - ub^2 I is not. Each side
/// gets three one-step widenings before CertificationError is thrown.
RatInterval sigma_min_bounds(const RatMatrix& a, int digits = kDefaultSigmaDigits);

}  // namespace edgecert

#endif  // EDGECERT_SINGULAR_BOUNDS_HPP_
