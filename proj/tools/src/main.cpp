#include <iostream>

#include "CLI11.hpp"
#include "edgecert/cli/commands.hpp"

namespace {

using edgecert::cli::EmbedOverrides;

void add_embed_flags(CLI::App& cmd, EmbedOverrides& o) {
  cmd.add_option("--seed", o.seed, "Random seed for the embedder");
  cmd.add_option("--round-digits", o.round_digits, "Decimal places kept when rounding coordinates")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--repulsion", o.repulsion_strength, "Repulsion strength")->check(CLI::PositiveNumber);
  cmd.add_option("--spring", o.spring_strength, "Spring strength")->check(CLI::PositiveNumber);
  cmd.add_option("--time-step", o.time_step, "Euler time step")->check(CLI::PositiveNumber);
  cmd.add_option("--phase1-iterations", o.phase1_iterations, "Iterations with repulsion and springs")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--phase2-iterations", o.phase2_iterations, "Iterations with springs only")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--max-restarts", o.max_restarts, "Extra attempts after a self-intersecting result")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified existence proofs for realizations with prescribed edge lengths"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "edgecert 0.1.0");

  edgecert::cli::ProveArgs prove;
  auto* prove_cmd = app.add_subcommand("prove", "Check the existence inequalities for a description file");
  prove_cmd->add_option("input", prove.input, "Complex description file")->required();
  prove_cmd->add_option("--digits", prove.digits, "Decimal places of square-root enclosures")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  prove_cmd->add_option("--sigma-digits", prove.sigma_digits, "Decimal places of the sigma_min enclosure")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  prove_cmd->add_flag("--verbose,-v", prove.verbose, "Print the full proof log (timing goes to stderr)");
  prove_cmd->add_option("--log-out", prove.log_out, "Also write the proof log to this file");
  add_embed_flags(*prove_cmd, prove.embed);

  edgecert::cli::EmbedArgs embed;
  auto* embed_cmd = app.add_subcommand("embed", "Generate starting coordinates with the heuristic embedder");
  embed_cmd->add_option("input", embed.input, "Complex description file")->required();
  embed_cmd->add_option("--dim", embed.dim, "Override the embedding dimension")->check(CLI::PositiveNumber);
  embed_cmd->add_option("--out,-o", embed.out, "Output description file (default stdout)");
  embed_cmd->add_flag("--verbose,-v", embed.verbose, "Report progress on stderr");
  add_embed_flags(*embed_cmd, embed.embed);

  edgecert::cli::DistanceArgs distance;
  auto* distance_cmd = app.add_subcommand("distance", "Exact squared distance between two simplices");
  distance_cmd->add_option("first", distance.first, "Point list, e.g. \"[[3,0,0],[0,3,0],[0,0,3]]\"");
  distance_cmd->add_option("second", distance.second, "Second point list");
  distance_cmd->add_option("--file", distance.file, "JSON file with \"first\" and \"second\" point lists");
  distance_cmd->add_flag("--verbose,-v", distance.verbose, "Also print barycentric weights on stderr");

  edgecert::cli::ExportObjArgs obj;
  auto* obj_cmd = app.add_subcommand("export-obj", "Write a Wavefront OBJ model of the coordinates");
  obj_cmd->add_option("input", obj.input, "Complex description file with coordinates")->required();
  obj_cmd->add_option("--round-digits", obj.round_digits, "Decimal places in v lines")
      ->check(CLI::NonNegativeNumber);
  obj_cmd->add_option("--out,-o", obj.out, "Output OBJ file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : edgecert::cli::kExitUsage;
  }

  if (*prove_cmd) return edgecert::cli::cmd_prove(prove, std::cout, std::cerr);
  if (*embed_cmd) return edgecert::cli::cmd_embed(embed, std::cout, std::cerr);
  if (*distance_cmd) return edgecert::cli::cmd_distance(distance, std::cout, std::cerr);
  return edgecert::cli::cmd_export_obj(obj, std::cout, std::cerr);
}
