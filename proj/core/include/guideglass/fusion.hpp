#pragma once

#include <optional>

#include "guideglass/geometry.hpp"
#include "guideglass/sensors.hpp"
#include "guideglass/wayfinding.hpp"

namespace guideglass {

struct FusionConfig
{
  double lambda{1.0};  // weight on |alpha|, per radian
  double mu{0.5};      // weight on 1 / W, meters
  double ultra_half_fov{deg_to_rad(7.5)};
  double delta{1.5};   // same threshold as WayfindingConfig::delta

  void validate() const;
};

/// Cost lambda * |alpha| + mu / W of a candidate. Throws std::invalid_argument
/// when the candidate has zero (or negative) width.
double direction_cost(const Candidate & c, const FusionConfig & cfg);

/// Depth-only optimum: the candidate of minimum cost, or nullopt for an empty set.
/// Ties go to the smaller |alpha|, then to the leftmost run.
std::optional<Candidate> select_direction(const CandidateSet & set, const FusionConfig & cfg);

/// Final output of one frame: a steering angle, or no safe direction.
struct GuidanceDecision
{
  std::optional<double> direction;  // radians
  std::optional<double> chosen_width_m;
  bool gated_by_ultrasonic{false};

  bool is_null() const { return !direction.has_value(); }

  static GuidanceDecision null() { return {}; }
  static GuidanceDecision toward(const Candidate & c) { return {c.alpha, c.width_m, false}; }

  friend bool operator==(const GuidanceDecision &, const GuidanceDecision &) = default;
};

/// Ultrasonic gate. Directions outside the ultrasonic cone pass unchanged. Inside
/// the cone the direction survives only when the reading is farther than delta;
/// otherwise the frame becomes Null with gated_by_ultrasonic set.
GuidanceDecision fuse_ultrasonic(const std::optional<Candidate> & opt, const UltrasonicReading & reading,
                                 const FusionConfig & cfg);

}  // namespace guideglass
