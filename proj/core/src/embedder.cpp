#include "edgecert/embedder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace edgecert {

namespace {

constexpr double kRepulsionSoftening = 1e-9;
constexpr double kSelfIntersectionThreshold = 1e-6;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double norm(const FloatPoint& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

// Adds `scale * dir` to force[i] and subtracts it from force[j].
void apply_pair(std::vector<FloatPoint>& force, std::size_t i, std::size_t j, const FloatPoint& dir,
                double scale) {
  for (std::size_t k = 0; k < dir.size(); ++k) {
    force[i][k] += scale * dir[k];
    force[j][k] -= scale * dir[k];
  }
}

void step(const SimplicialComplex& c, std::vector<FloatPoint>& pos, const std::vector<double>& target,
          const EmbedConfig& cfg, bool with_repulsion, double max_move) {
  const std::size_t nv = pos.size();
  const std::size_t dim = pos.front().size();
  std::vector<FloatPoint> force(nv, FloatPoint(dim, 0.0));
  FloatPoint diff(dim);

  auto separation = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < dim; ++k) diff[k] = pos[i][k] - pos[j][k];
    const double r = norm(diff);
    if (r > 0.0) {
      for (double& v : diff) v /= r;
    }
    return r;
  };

  if (with_repulsion) {
    for (std::size_t i = 0; i < nv; ++i) {
      for (std::size_t j = i + 1; j < nv; ++j) {
        const double r = separation(i, j);
        apply_pair(force, i, j, diff, cfg.repulsion_strength / (r * r + kRepulsionSoftening));
      }
    }
  }
  const auto& edges = c.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [i, j] = edges[e];
    const double r = separation(i, j);
    apply_pair(force, i, j, diff, -cfg.spring_strength * (r - target[e]));
  }

  for (std::size_t v = 0; v < nv; ++v) {
    // Per-step displacement is capped so near-coincident starts cannot blow up.
    const double len = norm(force[v]) * cfg.time_step;
    const double scale = len > max_move ? max_move / len : 1.0;
    for (std::size_t k = 0; k < dim; ++k) pos[v][k] += cfg.time_step * scale * force[v][k];
  }
}

}  // namespace

void EmbedConfig::validate() const {
  if (!(repulsion_strength > 0.0) || !(spring_strength > 0.0) || !(time_step > 0.0)) {
    throw std::invalid_argument("embed strengths and time step must be positive");
  }
  if (phase1_iterations == 0 || phase2_iterations == 0) {
    throw std::invalid_argument("embed iteration counts must be positive");
  }
  if (final_round_digits < 1) throw std::invalid_argument("final_round_digits must be at least 1");
  if (max_restarts == 0) throw std::invalid_argument("max_restarts must be positive");
}

double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  const std::uint64_t key = splitmix64(splitmix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL));
  const std::uint64_t bits = splitmix64(key ^ splitmix64(counter));
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::vector<FloatPoint> simulate_embedding(const SimplicialComplex& c, std::size_t dim,
                                           const std::vector<double>& target_lengths, const EmbedConfig& cfg,
                                           std::uint64_t attempt) {
  if (dim == 0) throw std::invalid_argument("embedding dimension must be positive");
  if (target_lengths.size() != c.num_edges()) throw std::invalid_argument("one target length per edge required");
  const std::size_t nv = c.num_vertices();
  std::vector<FloatPoint> pos(nv, FloatPoint(dim));
  std::uint64_t counter = 0;
  for (auto& p : pos) {
    for (double& x : p) x = counter_uniform(cfg.rng_seed, attempt, counter++);
  }
  double scale = 1.0;
  if (!target_lengths.empty()) {
    scale = *std::max_element(target_lengths.begin(), target_lengths.end());
  }
  const double max_move = 0.1 * scale;
  for (std::size_t it = 0; it < cfg.phase1_iterations; ++it) step(c, pos, target_lengths, cfg, true, max_move);
  for (std::size_t it = 0; it < cfg.phase2_iterations; ++it) step(c, pos, target_lengths, cfg, false, max_move);
  return pos;
}

std::vector<Point> round_to_rational(const std::vector<FloatPoint>& coords, int digits) {
  std::vector<Point> out;
  out.reserve(coords.size());
  for (const auto& p : coords) {
    Point q;
    q.reserve(p.size());
    for (double x : p) {
      if (!std::isfinite(x)) throw std::invalid_argument("cannot round non-finite coordinate");
      q.push_back(round_to_places(Rational::from_double(x), digits));
    }
    out.push_back(std::move(q));
  }
  return out;
}

Realization heuristic_embed(const SimplicialComplex& c, std::size_t dim, const SquaredLengthSpec& spec,
                            const EmbedConfig& cfg) {
  cfg.validate();
  std::vector<double> targets;
  for (const Rational& l2 : spec.resolve(c)) targets.push_back(std::sqrt(l2.to_double()));

  std::optional<Realization> last;
  for (std::uint64_t attempt = 0; attempt <= cfg.max_restarts; ++attempt) {
    const std::vector<FloatPoint> pos = simulate_embedding(c, dim, targets, cfg, attempt);
    bool finite = true;
    for (const auto& p : pos) {
      for (double x : p) finite = finite && std::isfinite(x);
    }
    if (!finite) continue;
    Realization r(c, dim, round_to_rational(pos, cfg.final_round_digits));
    if (!float_self_intersection_heuristic(c, pos, kSelfIntersectionThreshold)) return r;
    last = std::move(r);
  }
  if (!last) {
    std::vector<Point> origin(c.num_vertices(), Point(dim));
    last.emplace(c, dim, std::move(origin));
  }
  throw EmbedError("heuristic embedding still self-intersecting after " + std::to_string(cfg.max_restarts) +
                       " restarts",
                   *std::move(last));
}

}  // namespace edgecert
