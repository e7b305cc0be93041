#pragma once

#include <optional>

#include "guideglass/fusion.hpp"
#include "guideglass/scene.hpp"

namespace guideglass {

/// Walker model standing in for the user.
struct AgentConfig
{
  double step_len{0.1};                   // m per forward step
  double turn_rate{deg_to_rad(10.0)};     // max rotation toward a turn decision
  double scan_rate{deg_to_rad(15.0)};     // rotation per Null frame
  double radius{0.3};                     // body disc
  double step_over{0.02};                 // obstacles this low are walked over
  double forward_half{deg_to_rad(7.5)};   // |alpha| at or below this walks forward
  double homing_rate{deg_to_rad(5.0)};    // max rotation toward the goal per clear step
  int homing_delay{5};                    // clear forward steps before homing resumes
  double goal_radius{0.4};
  double frame_dt{0.2};                   // simulated seconds per step

  void validate() const;
};

struct AgentState
{
  Pose pose;
  double radius{0.3};
  bool collided{false};   // last translation attempt was blocked
  int steps{0};
  int collisions{0};      // contact episodes
  int clear_streak{0};
  int sweep_dir{-1};      // direction of the latest Null sweep (+1 right); flips per episode
  bool scanning{false};
  std::optional<Vec2> goal;
};

AgentState make_agent(const Pose & start, const AgentConfig & cfg, std::optional<Vec2> goal = std::nullopt);

/// True when a body disc of the given radius at p touches an obstacle taller than
/// step_over or leaves the scene bounds.
bool body_blocked(const Scene & scene, Vec2 p, double radius, double step_over);

/// Advances the walker by one frame:
///  - forward (|alpha| <= forward_half): move step_len along the heading, align
///    the heading with alpha, then rotate toward the goal once the clear streak
///    reaches homing_delay;
///  - turn: rotate toward alpha by at most turn_rate, no translation;
///  - Null: rotate in place by scan_rate. Each Null episode sweeps the opposite
///    way to the previous one.
/// A blocked move leaves the position unchanged and opens a contact episode.
AgentState step_agent(const AgentState & state, const GuidanceDecision & decision, const AgentConfig & cfg,
                      const Scene & scene);

}  // namespace guideglass
