#ifndef EDGECERT_RATIONAL_HPP_
#define EDGECERT_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace edgecert {

/// Raised on division by zero and other arithmetic domain violations.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a textual rational cannot be parsed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(const mpq_class& value);

  /// Exact value of a finite double. Throws ArithmeticError for NaN/inf.
  static Rational from_double(double value);

  /// Parses "7", "-3/4", "3914567 / 6250000", "0.625", "-1.5e-3".
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }

  /// "p / q", or just "p" when the denominator is 1.
  std::string to_string() const;

  /// Decimal rendering rounded half-away-from-zero to `places` digits.
  std::string to_decimal(int places) const;

  Rational abs() const;
  Rational floor() const;
  Rational ceil() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// 10^exponent for exponent >= 0, and 1/10^(-exponent) otherwise.
Rational pow10(int exponent);

/// Largest multiple of 10^-places not above x.
Rational floor_to_places(const Rational& x, int places);
/// Smallest multiple of 10^-places not below x.
Rational ceil_to_places(const Rational& x, int places);
/// Nearest multiple of 10^-places, ties away from zero.
Rational round_to_places(const Rational& x, int places);

}  // namespace edgecert

#endif  // EDGECERT_RATIONAL_HPP_
