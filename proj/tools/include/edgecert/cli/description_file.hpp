#ifndef EDGECERT_CLI_DESCRIPTION_FILE_HPP_
#define EDGECERT_CLI_DESCRIPTION_FILE_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edgecert/embedder.hpp"
#include "edgecert/realization.hpp"

namespace edgecert::cli {

/// Raised for malformed description files; what() carries the location.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// In-memory form of a complex description file:
///
///   {
///     "mode": "maximal_simplices",
///     "data": [["a", "b"], ["b", "c"], ["c", "a"]],
///     "dim": 2,
///     "desired_sq_lengths": {"default": "1", "edges": [["b", "c", "1/4"]]},
///     "coordinates": {"a": ["27779707 / 50000000", "-0.362"], ...},
///     "embed": {"rng_seed": 1, "final_round_digits": 8, ...}
///   }
///
/// Rational values are JSON integers or strings holding "p/q", "p / q" or a
/// decimal. "coordinates" and "embed" are optional.
struct ComplexDescription {
  std::vector<std::vector<std::string>> data;
  std::size_t dim = 0;
  SquaredLengthSpec desired;
  std::optional<std::map<std::string, Point>> coordinates;
  std::optional<EmbedConfig> embed;

  SimplicialComplex complex() const;
  /// Throws FormatError when coordinates are absent.
  Realization realization() const;

  friend bool operator==(const ComplexDescription&, const ComplexDescription&) = default;
};

/// Parses and validates a description. Syntax errors report line and column.
ComplexDescription parse_description(std::string_view text);
ComplexDescription load_description(const std::string& path);

std::string serialize_description(const ComplexDescription& d);

/// Copy of `d` with coordinates taken from `r`.
ComplexDescription with_realization(ComplexDescription d, const Realization& r);

/// Parses "[[3, 0, 0], [0, 3, 0]]"; entries may be integers, decimals,
/// fractions, or quoted strings of those.
std::vector<Point> parse_point_list(std::string_view text);

}  // namespace edgecert::cli

#endif  // EDGECERT_CLI_DESCRIPTION_FILE_HPP_
