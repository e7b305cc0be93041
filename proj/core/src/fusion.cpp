#include "guideglass/fusion.hpp"

#include <cmath>
#include <stdexcept>

namespace guideglass {

void FusionConfig::validate() const
{
  if (!(lambda >= 0.0) || !(mu >= 0.0)) {
    throw std::invalid_argument("fusion: weights must be non-negative");
  }
  if (lambda == 0.0 && mu == 0.0) {
    throw std::invalid_argument("fusion: lambda and mu cannot both be zero");
  }
  if (!(ultra_half_fov > 0.0)) {
    throw std::invalid_argument("fusion: ultrasonic half field of view must be positive");
  }
  if (!(delta > 0.0)) {
    throw std::invalid_argument("fusion: delta must be positive");
  }
}

double direction_cost(const Candidate & c, const FusionConfig & cfg)
{
  if (!(c.width_m > 0.0)) {
    throw std::invalid_argument("select_direction: candidate has zero traversable width");
  }
  return cfg.lambda * std::abs(c.alpha) + cfg.mu / c.width_m;
}

std::optional<Candidate> select_direction(const CandidateSet & set, const FusionConfig & cfg)
{
  std::optional<Candidate> best;
  double best_cost = 0.0;
  for (const auto & c : set.candidates) {
    const double cost = direction_cost(c, cfg);
    if (!best) {
      best = c;
      best_cost = cost;
      continue;
    }
    const double abs_alpha = std::abs(c.alpha);
    const double best_abs = std::abs(best->alpha);
    const bool better = cost < best_cost ||
                        (cost == best_cost && (abs_alpha < best_abs ||
                                               (abs_alpha == best_abs && c.u_start < best->u_start)));
    if (better) {
      best = c;
      best_cost = cost;
    }
  }
  return best;
}

GuidanceDecision fuse_ultrasonic(const std::optional<Candidate> & opt, const UltrasonicReading & reading,
                                 const FusionConfig & cfg)
{
  if (!opt) {
    return GuidanceDecision::null();
  }
  if (std::abs(opt->alpha) > cfg.ultra_half_fov) {
    return GuidanceDecision::toward(*opt);
  }
  if (reading.farther_than(cfg.delta)) {
    return GuidanceDecision::toward(*opt);
  }
  GuidanceDecision gated;
  gated.gated_by_ultrasonic = true;
  return gated;
}

}  // namespace guideglass
