#include "edgecert/interval.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "edgecert/decimal_format.hpp"

namespace edgecert {

RatInterval::RatInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) {
    throw std::invalid_argument("interval lower endpoint " + lo_.to_string() +
                                " exceeds upper endpoint " + hi_.to_string());
  }
}

std::string RatInterval::to_string() const {
  return "[" + lo_.to_string() + ", " + hi_.to_string() + "] ~ " + approx_interval(*this);
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return {a.lo() + b.lo(), a.hi() + b.hi()};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return {a.lo() - b.hi(), a.hi() - b.lo()};
}

RatInterval operator-(const RatInterval& a) { return {-a.hi(), -a.lo()}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  const Rational p[] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
  return {*std::min_element(std::begin(p), std::end(p)), *std::max_element(std::begin(p), std::end(p))};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
  if (b.contains_zero()) throw ArithmeticError("interval division by an interval containing zero");
  const Rational one(1);
  return a * RatInterval(one / b.hi(), one / b.lo());
}

RatInterval square(const RatInterval& a) {
  const Rational l2 = a.lo() * a.lo();
  const Rational h2 = a.hi() * a.hi();
  if (a.contains_zero()) return {Rational(0), std::max(l2, h2)};
  return {std::min(l2, h2), std::max(l2, h2)};
}

std::ostream& operator<<(std::ostream& os, const RatInterval& iv) { return os << iv.to_string(); }

RatInterval sqrt_bounds(const Rational& x, int digits) {
  if (x.sign() < 0) throw ArithmeticError("square root of negative rational " + x.to_string());
  if (digits < 1) throw std::invalid_argument("sqrt_bounds requires digits >= 1");
  if (x.is_zero()) return RatInterval(Rational(0));

  const double seed = std::sqrt(x.to_double());
  if (!std::isfinite(seed)) {
    throw CertificationError("no finite floating-point seed for sqrt(" + x.to_string() + ")");
  }
  const Rational f = Rational::from_double(seed);
  const Rational step = pow10(-digits);
  Rational lo = floor_to_places(f, digits);
  Rational hi = ceil_to_places(f, digits);

  constexpr int kMaxWidenings = 3;
  for (int attempt = 0; attempt <= kMaxWidenings; ++attempt) {
    if (lo.sign() < 0) lo = Rational(0);
    if (lo * lo <= x && x <= hi * hi) return {lo, hi};
    lo -= step;
    hi += step;
  }
  throw CertificationError("could not certify square-root bounds for " + x.to_string());
}

RatInterval interval_sqrt(const RatInterval& iv, int digits) {
  if (iv.lo().sign() < 0) {
    throw ArithmeticError("square root of interval with negative endpoint " + iv.lo().to_string());
  }
  if (iv.lo() == iv.hi()) return sqrt_bounds(iv.lo(), digits);
  return {sqrt_bounds(iv.lo(), digits).lo(), sqrt_bounds(iv.hi(), digits).hi()};
}

Certainty certified_less(const RatInterval& a, const RatInterval& b) {
  if (a.hi() < b.lo()) return Certainty::kTrue;
  if (b.hi() <= a.lo()) return Certainty::kFalse;
  return Certainty::kUnknown;
}

const char* to_string(Certainty c) {
  switch (c) {
    case Certainty::kTrue:
      return "true";
    case Certainty::kFalse:
      return "false";
    case Certainty::kUnknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace edgecert
