#ifndef EDGECERT_EMBEDDER_HPP_
#define EDGECERT_EMBEDDER_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "edgecert/complex.hpp"
#include "edgecert/float_geometry.hpp"
#include "edgecert/realization.hpp"

namespace edgecert {

struct EmbedConfig {
  double repulsion_strength = 0.2;
  double spring_strength = 1.0;
  double time_step = 0.05;
  std::size_t phase1_iterations = 2000;  // repulsion + springs
  std::size_t phase2_iterations = 2000;  // springs only
  std::uint64_t rng_seed = 1;
  int final_round_digits = 8;
  std::size_t max_restarts = 10;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;

  friend bool operator==(const EmbedConfig&, const EmbedConfig&) = default;
};

/// Thrown when every attempt looked self-intersecting; carries the last one.
class EmbedError : public std::runtime_error {
 public:
  EmbedError(const std::string& what, Realization last_attempt)
      : std::runtime_error(what), last_attempt_(std::move(last_attempt)) {}
  const Realization& last_attempt() const { return last_attempt_; }

 private:
  Realization last_attempt_;
};

/// Uniform draw in [0, 1) from a counter-based generator: the value depends
/// only on (seed, stream, counter).
double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// Runs the two-phase force simulation once from the state seeded by
/// (cfg.rng_seed, attempt). Pure floating point.
std::vector<FloatPoint> simulate_embedding(const SimplicialComplex& c, std::size_t dim,
                                           const std::vector<double>& target_lengths, const EmbedConfig& cfg,
                                           std::uint64_t attempt);

/// Each coordinate becomes round(x * 10^digits) / 10^digits exactly. Throws
/// std::invalid_argument for non-finite input.
std::vector<Point> round_to_rational(const std::vector<FloatPoint>& coords, int digits);

/// Physics-style heuristic realization: random start, repulsion + springs,
/// then springs alone, restarting (up to cfg.max_restarts extra attempts)
/// while the float self-intersection heuristic fires, then exact rounding.
/// Not certified.
Realization heuristic_embed(const SimplicialComplex& c, std::size_t dim, const SquaredLengthSpec& spec,
                            const EmbedConfig& cfg = {});

}  // namespace edgecert

#endif  // EDGECERT_EMBEDDER_HPP_
