#ifndef EDGECERT_DECIMAL_FORMAT_HPP_
#define EDGECERT_DECIMAL_FORMAT_HPP_

#include <string>

#include "edgecert/interval.hpp"
#include "edgecert/rational.hpp"

namespace edgecert {

/// Places kept in the human-readable approximations of the proof log.
inline constexpr int kApproxPlaces = 5;

/// Shortest decimal for the value rounded to `places` decimals, e.g. "0.43301",
/// "1e-05", "0.0". Display only; never used for decisions.
std::string approx(const Rational& x, int places = kApproxPlaces);

/// "[a, b]" with both endpoints rendered by approx().
std::string approx_interval(const RatInterval& iv, int places = kApproxPlaces);

}  // namespace edgecert

#endif  // EDGECERT_DECIMAL_FORMAT_HPP_
