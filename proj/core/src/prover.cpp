#include "edgecert/prover.hpp"

#include <ostream>

#include "edgecert/proof_log.hpp"

namespace edgecert {

namespace {

RatInterval exact(long v) { return RatInterval(Rational(v)); }

RatInterval sqrt_of_count(std::size_t n, int digits) {
  return sqrt_bounds(Rational(mpz_class(static_cast<unsigned long>(n))), digits);
}

}  // namespace

const char* to_string(Stage s) {
  switch (s) {
    case Stage::kDimension:
      return "inequality 1";
    case Stage::kSelfIntersection:
      return "self-intersection";
    case Stage::kSigma:
      return "inequality 2";
    case Stage::kRho:
      return "inequality 3";
    case Stage::kDisplacement:
      return "inequality 4";
  }
  return "unknown stage";
}

const char* claim_text(Stage s) {
  switch (s) {
    case Stage::kDimension:
      return "d|V| >= |E|";
    case Stage::kSelfIntersection:
      return "starting realization non-self-intersecting";
    case Stage::kSigma:
      return "sigma_min > 0";
    case Stage::kRho:
      return "rho < sigma_min ^ 2 / (16 * E ^ .5)";
    case Stage::kDisplacement:
      return "LHS < CD / |V| ^ .5";
  }
  return "";
}

std::optional<RatInterval> ProofReport::displacement_bound() const {
  if (!inequality4) return std::nullopt;
  return inequality4->lhs;
}

DimensionResult check_dimension_inequality(const Realization& r) {
  DimensionResult out;
  out.dim = r.dim();
  out.num_vertices = r.complex().num_vertices();
  out.num_edges = r.complex().num_edges();
  out.pass = out.dim * out.num_vertices >= out.num_edges;
  return out;
}

SelfIntersectionResult check_non_self_intersection(const Realization& r, int digits) {
  SelfIntersectionResult out;
  try {
    out.collision = collision_distance_squared(r);
    if (out.collision.unconstrained()) {
      out.pass = true;
      return out;
    }
    out.cd_interval = sqrt_bounds(*out.collision.squared, digits);
    out.pass = out.collision.squared->sign() > 0;
  } catch (const std::exception& e) {
    out.pass = false;
    out.error = e.what();
  }
  return out;
}

SigmaResult check_sigma_inequality(const Realization& r, int sigma_digits) {
  SigmaResult out;
  try {
    out.sigma_interval = sigma_min_bounds(length_jacobian(r), sigma_digits);
    out.pass = out.sigma_interval->lo().sign() > 0;
  } catch (const std::exception& e) {
    out.pass = false;
    out.error = e.what();
  }
  return out;
}

RhoResult check_rho_inequality(const Realization& r, const SquaredLengthSpec& spec, const SigmaResult& sigma,
                               int digits) {
  RhoResult out;
  try {
    const std::vector<Rational> desired = spec.resolve(r.complex());
    const std::vector<Rational> current = squared_lengths(r);
    for (std::size_t e = 0; e < desired.size(); ++e) {
      const Rational diff = desired[e] - current[e];
      out.rho_squared += diff * diff;
    }
    out.rho_interval = sqrt_bounds(out.rho_squared, digits);
    out.sqrt_edges = sqrt_of_count(r.complex().num_edges(), digits);
    if (!sigma.sigma_interval) {
      out.error = "no sigma_min enclosure available";
      return out;
    }
    out.bound_interval = square(*sigma.sigma_interval) / (exact(16) * *out.sqrt_edges);
    out.comparison = certified_less(*out.rho_interval, *out.bound_interval);
    out.pass = out.comparison == Certainty::kTrue;
  } catch (const std::exception& e) {
    out.pass = false;
    out.error = e.what();
  }
  return out;
}

DisplacementResult check_displacement_inequality(const Realization& r, const SigmaResult& sigma,
                                                 const RhoResult& rho, const SelfIntersectionResult& cd,
                                                 int digits) {
  DisplacementResult out;
  try {
    if (!sigma.sigma_interval || !rho.rho_interval || !rho.sqrt_edges) {
      out.error = "inequality 4 needs the sigma_min and rho enclosures";
      return out;
    }
    const RatInterval& s = *sigma.sigma_interval;
    const RatInterval radicand = square(s) - exact(16) * *rho.rho_interval * *rho.sqrt_edges;
    if (radicand.hi().sign() < 0) {
      out.error = "sigma_min ^ 2 - 16 * rho * |E| ^ .5 is certainly negative";
      return out;
    }
    // The true radicand is non-negative whenever inequality 3 holds.
    const RatInterval clamped(radicand.lo().sign() < 0 ? Rational(0) : radicand.lo(), radicand.hi());
    out.lhs_numerator = s - interval_sqrt(clamped, digits);
    out.lhs_denominator = exact(8) * *rho.sqrt_edges;
    out.lhs = *out.lhs_numerator / *out.lhs_denominator;
    if (!cd.cd_interval) {
      if (!cd.collision.unconstrained()) {
        out.error = "no collision distance enclosure available";
        return out;
      }
      out.comparison = Certainty::kTrue;
      out.pass = true;
      return out;
    }
    out.rhs = *cd.cd_interval / sqrt_of_count(r.complex().num_vertices(), digits);
    out.comparison = certified_less(*out.lhs, *out.rhs);
    out.pass = out.comparison == Certainty::kTrue;
  } catch (const std::exception& e) {
    out.pass = false;
    out.error = e.what();
  }
  return out;
}

ProofReport prove_existence(const Realization& r, const SquaredLengthSpec& spec, const ProverOptions& options,
                            std::ostream* log) {
  ProofReport report{r, spec, options, {}, {}, {}, {}, {}, false, {}, {}};
  auto fail = [&](Stage stage, std::string reason) {
    report.proven = false;
    report.failed_at = stage;
    report.failure_reason = std::move(reason);
  };

  // Stages run in order; the first failure returns early.
  [&] {
    report.inequality1 = check_dimension_inequality(r);
    if (!report.inequality1->pass) return fail(Stage::kDimension, "d|V| < |E|");

    report.self_intersection = check_non_self_intersection(r, options.digits);
    if (!report.self_intersection->pass) {
      return fail(Stage::kSelfIntersection, report.self_intersection->error.empty()
                                                ? "collision distance is zero"
                                                : report.self_intersection->error);
    }

    report.inequality2 = check_sigma_inequality(r, options.sigma_digits);
    if (!report.inequality2->pass) {
      return fail(Stage::kSigma, report.inequality2->error.empty() ? "sigma_min lower bound is not positive"
                                                                    : report.inequality2->error);
    }

    report.inequality3 = check_rho_inequality(r, spec, *report.inequality2, options.digits);
    if (!report.inequality3->pass) {
      return fail(Stage::kRho, report.inequality3->error.empty()
                                   ? std::string("comparison ") + to_string(report.inequality3->comparison)
                                   : report.inequality3->error);
    }

    report.inequality4 = check_displacement_inequality(r, *report.inequality2, *report.inequality3,
                                                       *report.self_intersection, options.digits);
    if (!report.inequality4->pass) {
      return fail(Stage::kDisplacement, report.inequality4->error.empty()
                                            ? std::string("comparison ") + to_string(report.inequality4->comparison)
                                            : report.inequality4->error);
    }
    report.proven = true;
  }();

  if (log != nullptr) *log << render_proof_log(report);
  return report;
}

}  // namespace edgecert
