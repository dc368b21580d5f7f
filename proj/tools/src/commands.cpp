#include "edgecert/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "edgecert/proof_log.hpp"
#include "json.hpp"

namespace edgecert::cli {

namespace {

// Writes `text` to `path`, or to `out` when no path is given.
void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + *path + "'");
  file << text;
  if (!file) throw std::runtime_error("error writing '" + *path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Last non-empty line of the proof log, without indentation.
std::string terminal_line(const std::string& log) {
  std::string line;
  std::istringstream lines(log);
  for (std::string next; std::getline(lines, next);) {
    if (!next.empty()) line = std::move(next);
  }
  return line.substr(std::min(line.find_first_not_of('\t'), line.size()));
}

// Runs `body`, mapping exceptions to usage-level exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const EmbedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMethodFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

EmbedConfig EmbedOverrides::apply(EmbedConfig base) const {
  if (repulsion_strength) base.repulsion_strength = *repulsion_strength;
  if (spring_strength) base.spring_strength = *spring_strength;
  if (time_step) base.time_step = *time_step;
  if (phase1_iterations) base.phase1_iterations = *phase1_iterations;
  if (phase2_iterations) base.phase2_iterations = *phase2_iterations;
  if (seed) base.rng_seed = *seed;
  if (round_digits) base.final_round_digits = *round_digits;
  if (max_restarts) base.max_restarts = *max_restarts;
  base.validate();
  return base;
}

int cmd_prove(const ProveArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.digits < 1 || args.sigma_digits < 1) throw std::invalid_argument("digit counts must be positive");
    const ComplexDescription d = load_description(args.input);
    const auto start = std::chrono::steady_clock::now();

    std::optional<Realization> r;
    if (d.coordinates) {
      r = d.realization();
    } else if (d.embed) {
      const EmbedConfig cfg = args.embed.apply(*d.embed);
      if (args.verbose) err << "no coordinates given; running heuristic embedding (seed " << cfg.rng_seed << ")\n";
      r = heuristic_embed(d.complex(), d.dim, d.desired, cfg);
    } else {
      throw FormatError(args.input + ": needs \"coordinates\" or an \"embed\" block");
    }

    const ProofReport report = prove_existence(*r, d.desired, {args.digits, args.sigma_digits});
    const std::string log = render_proof_log(report);
    if (args.verbose) {
      out << log;
    } else {
      out << terminal_line(log) << "\n";
    }
    if (args.log_out) emit(args.log_out, log, out);
    if (args.verbose) {
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      err << "verdict: "
          << (report.proven ? std::string("PROVEN") : std::string("FAILED_AT ") + to_string(*report.failed_at));
      if (!report.proven) err << " (" << report.failure_reason << ")";
      err << "; " << secs << " s\n";
    }
    return report.proven ? kExitProven : kExitMethodFailure;
  });
}

int cmd_embed(const EmbedArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ComplexDescription d = load_description(args.input);
    if (args.dim) {
      if (*args.dim == 0) throw std::invalid_argument("--dim must be positive");
      d.dim = *args.dim;
    }
    const EmbedConfig cfg = args.embed.apply(d.embed.value_or(EmbedConfig{}));
    const Realization r = heuristic_embed(d.complex(), d.dim, d.desired, cfg);
    d.embed = cfg;
    emit(args.out, serialize_description(with_realization(std::move(d), r)), out);
    if (args.verbose) err << "embedded " << r.complex().num_vertices() << " vertices in dimension " << r.dim() << "\n";
    return kExitProven;
  });
}

std::string format_distance(const SimplexDistance& d) {
  return "(" + d.squared_distance.to_string() + ", (" + format_point(d.closest_first) + ", " +
         format_point(d.closest_second) + "))";
}

int cmd_distance(const DistanceArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<Point> x;
    std::vector<Point> y;
    if (args.file) {
      if (args.first || args.second) throw std::invalid_argument("give either two point lists or --file");
      const std::string text = read_file(*args.file);
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(*args.file + ": " + e.what());
      }
      if (!doc.is_object() || !doc.contains("first") || !doc.contains("second")) {
        throw FormatError(*args.file + ": expected an object with \"first\" and \"second\" point lists");
      }
      x = parse_point_list(doc["first"].dump());
      y = parse_point_list(doc["second"].dump());
    } else {
      if (!args.first || !args.second) throw std::invalid_argument("two point lists are required");
      x = parse_point_list(*args.first);
      y = parse_point_list(*args.second);
    }
    const SimplexDistance d = simplex_square_distance(x, y);
    out << format_distance(d) << "\n";
    if (args.verbose) {
      err << "alpha: " << format_point(d.alpha) << "\nbeta: " << format_point(d.beta) << "\n";
    }
    return kExitProven;
  });
}

std::string to_obj(const Realization& r, int round_digits) {
  const SimplicialComplex& c = r.complex();
  std::ostringstream os;
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    os << "v";
    for (std::size_t k = 0; k < 3; ++k) {
      os << " " << (k < r.dim() ? r.coord(v)[k].to_decimal(round_digits) : Rational(0).to_decimal(round_digits));
    }
    os << "\n";
  }
  const std::vector<Simplex> triangles = c.simplices_of_size(3);
  std::set<Edge> covered;
  for (const Simplex& t : triangles) {
    covered.insert({t[0], t[1]});
    covered.insert({t[0], t[2]});
    covered.insert({t[1], t[2]});
  }
  for (const Edge& e : c.edges()) {
    if (!covered.contains(e)) os << "l " << e.first + 1 << " " << e.second + 1 << "\n";
  }
  for (const Simplex& t : triangles) os << "f " << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
  return os.str();
}

int cmd_export_obj(const ExportObjArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ComplexDescription d = load_description(args.input);
    if (!d.coordinates) throw FormatError(args.input + ": no coordinates to export");
    const int digits = args.round_digits.value_or(d.embed ? d.embed->final_round_digits : EmbedConfig{}.final_round_digits);
    if (digits < 0) throw std::invalid_argument("--round-digits must be non-negative");
    emit(args.out, to_obj(d.realization(), digits), out);
    return kExitProven;
  });
}

}  // namespace edgecert::cli
