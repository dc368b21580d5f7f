#ifndef EDGECERT_PROVER_HPP_
#define EDGECERT_PROVER_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "edgecert/interval.hpp"
#include "edgecert/realization.hpp"
#include "edgecert/singular_bounds.hpp"

namespace edgecert {

enum class Stage {
  kDimension,         // inequality 1: d|V| >= |E|
  kSelfIntersection,  // starting realization has positive collision distance
  kSigma,             // inequality 2: sigma_min > 0
  kRho,               // inequality 3: rho < sigma_min^2 / (16 sqrt|E|)
  kDisplacement,      // inequality 4: displacement bound < CD / sqrt|V|
};

const char* to_string(Stage s);
/// The claim a stage verifies, as printed in the proof log.
const char* claim_text(Stage s);

struct ProverOptions {
  int digits = kDefaultSqrtDigits;  // square-root enclosures
  int sigma_digits = kDefaultSigmaDigits;
};

struct DimensionResult {
  std::size_t dim = 0;
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  bool pass = false;
};

struct SelfIntersectionResult {
  CollisionDistance collision;
  std::optional<RatInterval> cd_interval;  // nullopt when unconstrained
  bool pass = false;
  std::string error;
};

struct SigmaResult {
  std::optional<RatInterval> sigma_interval;
  bool pass = false;
  std::string error;
};

struct RhoResult {
  Rational rho_squared;
  std::optional<RatInterval> rho_interval;
  std::optional<RatInterval> sqrt_edges;
  std::optional<RatInterval> bound_interval;
  Certainty comparison = Certainty::kUnknown;
  bool pass = false;
  std::string error;
};

struct DisplacementResult {
  std::optional<RatInterval> lhs_numerator;
  std::optional<RatInterval> lhs_denominator;
  std::optional<RatInterval> lhs;
  std::optional<RatInterval> rhs;  // nullopt when the collision distance is unconstrained
  Certainty comparison = Certainty::kUnknown;
  bool pass = false;
  std::string error;
};

struct ProofReport {
  Realization realization;
  SquaredLengthSpec desired;
  ProverOptions options;

  std::optional<DimensionResult> inequality1;
  std::optional<SelfIntersectionResult> self_intersection;
  std::optional<SigmaResult> inequality2;
  std::optional<RhoResult> inequality3;
  std::optional<DisplacementResult> inequality4;

  bool proven = false;
  std::optional<Stage> failed_at;
  std::string failure_reason;

  /// Enclosure of the left side of inequality 4: how far the exact solution
  /// can lie from the starting realization. Present once that stage ran.
  std::optional<RatInterval> displacement_bound() const;
};

DimensionResult check_dimension_inequality(const Realization& r);

/// Exact squared collision distance; passes iff it is positive (or there are
/// no non-adjacent pairs at all).
SelfIntersectionResult check_non_self_intersection(const Realization& r, int digits = kDefaultSqrtDigits);

/// Certified sigma_min enclosure of the length Jacobian; passes iff lb > 0.
SigmaResult check_sigma_inequality(const Realization& r, int sigma_digits = kDefaultSigmaDigits);

/// rho^2 exactly, then rho < sigma^2 / (16 sqrt|E|) on enclosures.
RhoResult check_rho_inequality(const Realization& r, const SquaredLengthSpec& spec, const SigmaResult& sigma,
                               int digits = kDefaultSqrtDigits);

/// (sigma - sqrt(sigma^2 - 16 rho sqrt|E|)) / (8 sqrt|E|) < CD / sqrt|V| on
/// enclosures. The inner radicand is clamped at 0 from below.
DisplacementResult check_displacement_inequality(const Realization& r, const SigmaResult& sigma,
                                                 const RhoResult& rho, const SelfIntersectionResult& cd,
                                                 int digits = kDefaultSqrtDigits);

/// Runs every stage in order, stopping at the first failure. Never reports
/// proven unless every stage passed; internal errors become failures. When
/// `log` is non-null the proof log is written to it as stages complete.
ProofReport prove_existence(const Realization& r, const SquaredLengthSpec& spec, const ProverOptions& options = {},
                            std::ostream* log = nullptr);

}  // namespace edgecert

#endif  // EDGECERT_PROVER_HPP_
