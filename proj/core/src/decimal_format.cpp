#include "edgecert/decimal_format.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace edgecert {

std::string approx(const Rational& x, int places) {
  // strtod on the exact decimal string is correctly rounded; mpq_get_d truncates.
  const double rounded = std::strtod(x.to_decimal(places).c_str(), nullptr);
  char buf[64];
  const auto [end, ec] = std::to_chars(std::begin(buf), std::end(buf), rounded);
  std::string out = ec == std::errc{} ? std::string(buf, end) : std::to_string(rounded);
  if (out.find_first_of(".e") == std::string::npos && std::isfinite(rounded)) out += ".0";
  return out;
}

std::string approx_interval(const RatInterval& iv, int places) {
  return "[" + approx(iv.lo(), places) + ", " + approx(iv.hi(), places) + "]";
}

}  // namespace edgecert
