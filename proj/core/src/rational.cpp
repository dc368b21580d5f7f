#include "edgecert/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace edgecert {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Optional sign followed by digits.
mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s)) throw ParseError("malformed rational literal '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    const mpz_class exp_value = parse_integer(exp_part, whole);
    if (!exp_value.fits_sint_p() || abs(exp_value) > 100000) {
      throw ParseError("exponent out of range in '" + std::string(whole) + "'");
    }
    exponent = static_cast<int>(exp_value.get_si());
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  std::string_view int_part = dot == std::string_view::npos ? s : s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw ParseError("malformed rational literal '" + std::string(whole) + "'");
  }
  if ((!int_part.empty() && !is_digits(int_part)) || (!frac_part.empty() && !is_digits(frac_part))) {
    throw ParseError("malformed rational literal '" + std::string(whole) + "'");
  }
  std::string digits(int_part);
  digits += frac_part;
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  return Rational(mantissa) * pow10(exponent - static_cast<int>(frac_part.size()));
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw ArithmeticError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (value_.get_den() == 0) throw ArithmeticError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw ArithmeticError("cannot convert non-finite double to rational");
  return Rational(mpq_class(value));
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational literal");
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = trim(s.substr(slash + 1));
    if (den.find('/') != std::string_view::npos) {
      throw ParseError("malformed rational literal '" + std::string(s) + "'");
    }
    const mpz_class n = parse_integer(num, s);
    const mpz_class d = parse_integer(den, s);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rational(n, d);
  }
  if (s.find_first_of(".eE") != std::string_view::npos) return parse_decimal(s, s);
  return Rational(parse_integer(s, s));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + " / " + value_.get_den().get_str();
}

std::string Rational::to_decimal(int places) const {
  if (places < 0) places = 0;
  const Rational rounded = round_to_places(*this, places);
  const mpz_class scaled = (rounded * pow10(places)).numerator();
  std::string digits = mpz_class(::abs(scaled)).get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return scaled < 0 ? "-" + digits : digits;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(q);
}

Rational Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(q);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow10(int exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

Rational floor_to_places(const Rational& x, int places) {
  const Rational scale = pow10(places);
  return (x * scale).floor() / scale;
}

Rational ceil_to_places(const Rational& x, int places) {
  const Rational scale = pow10(places);
  return (x * scale).ceil() / scale;
}

Rational round_to_places(const Rational& x, int places) {
  const Rational scale = pow10(places);
  const Rational half(mpz_class(1), mpz_class(2));
  const Rational scaled = x.abs() * scale + half;
  const Rational magnitude = scaled.floor() / scale;
  return x.sign() < 0 ? -magnitude : magnitude;
}

}  // namespace edgecert
