#ifndef EDGECERT_CLI_COMMANDS_HPP_
#define EDGECERT_CLI_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "edgecert/cli/description_file.hpp"
#include "edgecert/prover.hpp"

namespace edgecert::cli {

enum ExitCode : int {
  kExitProven = 0,
  kExitMethodFailure = 1,
  kExitUsage = 2,
};

/// Overrides for the embed block; unset fields keep the file's (or default) values.
struct EmbedOverrides {
  std::optional<double> repulsion_strength;
  std::optional<double> spring_strength;
  std::optional<double> time_step;
  std::optional<std::size_t> phase1_iterations;
  std::optional<std::size_t> phase2_iterations;
  std::optional<std::uint64_t> seed;
  std::optional<int> round_digits;
  std::optional<std::size_t> max_restarts;

  EmbedConfig apply(EmbedConfig base) const;
};

struct ProveArgs {
  std::string input;
  int digits = kDefaultSqrtDigits;
  int sigma_digits = kDefaultSigmaDigits;
  bool verbose = false;  // full proof log on `out` instead of the verdict line
  std::optional<std::string> log_out;
  /// Used only when the file has no coordinates and they must be generated.
  EmbedOverrides embed;
};

struct EmbedArgs {
  std::string input;
  std::optional<std::size_t> dim;
  EmbedOverrides embed;
  std::optional<std::string> out;
  bool verbose = false;
};

struct DistanceArgs {
  std::optional<std::string> first;
  std::optional<std::string> second;
  /// JSON object {"first": [[...]], "second": [[...]]}.
  std::optional<std::string> file;
  bool verbose = false;
};

struct ExportObjArgs {
  std::string input;
  std::optional<int> round_digits;
  std::optional<std::string> out;
};

/// Each command writes results to `out`, diagnostics to `err`, and returns
/// an ExitCode value. No command throws.
int cmd_prove(const ProveArgs& args, std::ostream& out, std::ostream& err);
int cmd_embed(const EmbedArgs& args, std::ostream& out, std::ostream& err);
int cmd_distance(const DistanceArgs& args, std::ostream& out, std::ostream& err);
int cmd_export_obj(const ExportObjArgs& args, std::ostream& out, std::ostream& err);

/// Wavefront OBJ text: v lines (first three coordinates, zero-padded), l
/// lines for edges outside every triangle, f lines for every triangle.
std::string to_obj(const Realization& r, int round_digits);

/// "(1 / 3, ([1 / 3, 4 / 3, 4 / 3], [0, 1, 1]))"
std::string format_distance(const SimplexDistance& d);

}  // namespace edgecert::cli

#endif  // EDGECERT_CLI_COMMANDS_HPP_
