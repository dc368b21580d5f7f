#ifndef EDGECERT_INTERVAL_HPP_
#define EDGECERT_INTERVAL_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

#include "edgecert/rational.hpp"

namespace edgecert {

/// Decimal places used for square-root enclosures unless a caller overrides.
inline constexpr int kDefaultSqrtDigits = 8;

/// Raised when an a-posteriori exact check on a floating-point seeded bound
/// fails even after the bounded widening retries.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed interval [lo, hi] with rational endpoints. Arithmetic is exact, so
/// every result encloses the exact real result of the operation on any
/// members of the operands.
class RatInterval {
 public:
  RatInterval() = default;
  explicit RatInterval(Rational point) : lo_(point), hi_(std::move(point)) {}
  RatInterval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool subset_of(const RatInterval& other) const { return other.lo_ <= lo_ && hi_ <= other.hi_; }
  bool overlaps(const RatInterval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

  /// "[lo, hi] ~ [a, b]" in the proof-log style.
  std::string to_string() const;

  friend bool operator==(const RatInterval&, const RatInterval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
/// Throws ArithmeticError when b contains zero.
RatInterval operator/(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a);

/// Interval of x^2 for x in a (tighter than a * a when a straddles zero).
RatInterval square(const RatInterval& a);

std::ostream& operator<<(std::ostream& os, const RatInterval& iv);

/// Certified enclosure [l, u] of sqrt(x): l^2 <= x <= u^2 is checked exactly
/// before returning. Seeded from the hardware square root, rounded outward to
/// `digits` decimal places, widened by one decimal step up to three times.
/// Throws ArithmeticError for x < 0 and CertificationError if the exact check
/// never succeeds.
RatInterval sqrt_bounds(const Rational& x, int digits = kDefaultSqrtDigits);

/// Encloses sqrt(y) for every y in the interval.
RatInterval interval_sqrt(const RatInterval& iv, int digits = kDefaultSqrtDigits);

enum class Certainty { kTrue, kFalse, kUnknown };

/// kTrue iff a.hi < b.lo, kFalse iff b.hi <= a.lo, otherwise kUnknown.
Certainty certified_less(const RatInterval& a, const RatInterval& b);

const char* to_string(Certainty c);

}  // namespace edgecert

#endif  // EDGECERT_INTERVAL_HPP_
