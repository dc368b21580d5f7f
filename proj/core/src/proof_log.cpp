#include "edgecert/proof_log.hpp"

#include <sstream>

#include "edgecert/decimal_format.hpp"

namespace edgecert {

namespace {

std::string fractions(const RatInterval& iv) { return "[" + iv.lo().to_string() + ", " + iv.hi().to_string() + "]"; }

std::string in_interval(const RatInterval& iv) { return " in " + fractions(iv) + " ~ " + approx_interval(iv); }

void write_failure_detail(std::ostream& os, const std::string& error) {
  if (!error.empty()) os << "\tError: " << error << "\n";
}

void write_verdict_line(std::ostream& os, bool pass, Stage stage) {
  os << "\t" << (pass ? "Success: " : "Failed: unable to verify ") << claim_text(stage) << "\n";
}

}  // namespace

std::string format_label_lists(const std::vector<std::vector<std::string>>& lists) {
  std::string out = "[";
  for (std::size_t i = 0; i < lists.size(); ++i) {
    if (i > 0) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < lists[i].size(); ++j) {
      if (j > 0) out += ", ";
      out += "'" + lists[i][j] + "'";
    }
    out += "]";
  }
  return out + "]";
}

std::string format_point(const Point& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) out += ", ";
    out += p[k].to_string();
  }
  return out + "]";
}

std::string render_proof_log(const ProofReport& report) {
  std::ostringstream os;
  const Realization& r = report.realization;
  const SimplicialComplex& c = r.complex();

  os << "Attempting to prove existence\n\n";
  os << "Starting realization:\n";
  os << "\tAbstract data:\n";
  os << "\t\tmode: maximal_simplices\n";
  os << "\t\tdata: " << format_label_lists(c.input_simplices()) << "\n";
  os << "\tCoordinate Data:\n";
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    os << "\t\t" << c.label(v) << " : " << format_point(r.coord(v)) << "\n";
  }
  os << "\nDesired square lengths:\n";
  for (const auto& [key, value] : report.desired.entries()) {
    os << "\t('" << key.first << "', '" << key.second << "') : " << value << "\n";
  }
  if (report.desired.default_value()) os << "\tdefault : " << *report.desired.default_value() << "\n";

  if (const auto& s = report.inequality1) {
    os << "\nChecking inequality 1:\n";
    os << "\t d  = " << s->dim << "\n";
    os << "\t|V| = " << s->num_vertices << "\n";
    os << "\t|E| = " << s->num_edges << "\n";
    write_verdict_line(os, s->pass, Stage::kDimension);
  }

  if (const auto& s = report.self_intersection) {
    os << "\nChecking self-intersection:\n";
    if (s->collision.unconstrained() && s->error.empty()) {
      os << "\tNo non-adjacent simplex pairs: collision distance is unbounded\n";
    } else if (s->collision.squared) {
      os << "\tSquare collision distance = " << *s->collision.squared << "\n";
      if (s->collision.witness) {
        os << "\tClosest pair: " << c.format_simplex(s->collision.witness->first) << " and "
           << c.format_simplex(s->collision.witness->second) << "\n";
      }
      if (s->cd_interval) os << "\tCollision distance" << in_interval(*s->cd_interval) << "\n";
    }
    write_failure_detail(os, s->error);
    write_verdict_line(os, s->pass, Stage::kSelfIntersection);
  }

  if (const auto& s = report.inequality2) {
    os << "\nChecking inequality 2:\n";
    if (s->sigma_interval) os << "\tsigma_min" << in_interval(*s->sigma_interval) << "\n";
    write_failure_detail(os, s->error);
    write_verdict_line(os, s->pass, Stage::kSigma);
  }

  if (const auto& s = report.inequality3) {
    os << "\nChecking inequality 3:\n";
    os << "\trho_squared = " << s->rho_squared << "\n";
    if (s->rho_interval) os << "\trho" << in_interval(*s->rho_interval) << "\n";
    if (s->bound_interval) os << "\tsigma_min ^ 2 / (16 * E ^ .5)" << in_interval(*s->bound_interval) << "\n";
    write_failure_detail(os, s->error);
    write_verdict_line(os, s->pass, Stage::kRho);
  }

  if (const auto& s = report.inequality4) {
    os << "\nChecking inequality 4:\n";
    if (s->lhs_numerator) {
      os << "\tLHS NUM := sigma_min - [sigma_min ^ 2 - 16 * rho * |E| ^ .5 ] ^ .5" << in_interval(*s->lhs_numerator)
         << "\n";
    }
    if (s->lhs_denominator) os << "\tLHS DEN := 8 * |E| ^ .5" << in_interval(*s->lhs_denominator) << "\n";
    if (s->lhs) os << "\tLHS     := (LHS NUM) / (LHS DEN)" << in_interval(*s->lhs) << "\n";
    if (s->rhs) {
      os << "\tCD / |V| ^ .5" << in_interval(*s->rhs) << "\n";
    } else if (s->error.empty()) {
      os << "\tCD / |V| ^ .5 is unbounded\n";
    }
    write_failure_detail(os, s->error);
    write_verdict_line(os, s->pass, Stage::kDisplacement);
  }

  // On failure the failing stage's own "Failed: unable to verify" line ends
  // the log.
  if (report.proven) os << "\nSuccess: existence proven\n";
  return os.str();
}

}  // namespace edgecert
