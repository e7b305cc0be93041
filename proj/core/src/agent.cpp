#include "guideglass/agent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace guideglass {

void AgentConfig::validate() const
{
  if (!(step_len > 0.0) || !(radius > 0.0)) {
    throw std::invalid_argument("agent: step length and radius must be positive");
  }
  if (!(turn_rate > 0.0) || !(scan_rate > 0.0) || !(homing_rate >= 0.0)) {
    throw std::invalid_argument("agent: rotation rates must be positive");
  }
  if (!(forward_half > 0.0) || homing_delay < 0 || !(goal_radius > 0.0) || !(frame_dt > 0.0)) {
    throw std::invalid_argument("agent: invalid forward band, homing delay, goal radius or frame period");
  }
}

AgentState make_agent(const Pose & start, const AgentConfig & cfg, std::optional<Vec2> goal)
{
  AgentState s;
  s.pose = start;
  s.radius = cfg.radius;
  s.goal = goal;
  return s;
}

bool body_blocked(const Scene & scene, Vec2 p, double radius, double step_over)
{
  const Rect & b = scene.bounds;
  if (p.x - radius < b.x0 || p.x + radius > b.x1 || p.y - radius < b.y0 || p.y + radius > b.y1) {
    return true;
  }
  return std::any_of(scene.obstacles.begin(), scene.obstacles.end(), [&](const Obstacle & o) {
    return o.height > step_over && o.footprint.distance_to(p) < radius;
  });
}

AgentState step_agent(const AgentState & state, const GuidanceDecision & decision, const AgentConfig & cfg,
                      const Scene & scene)
{
  AgentState next = state;
  ++next.steps;

  if (decision.is_null()) {
    if (!next.scanning) {
      next.scanning = true;
      next.sweep_dir = -next.sweep_dir;
    }
    next.pose.yaw = wrap_angle(next.pose.yaw + next.sweep_dir * cfg.scan_rate);
    next.clear_streak = 0;
    return next;
  }
  next.scanning = false;

  const double alpha = *decision.direction;
  if (std::abs(alpha) > cfg.forward_half) {
    next.pose.yaw = wrap_angle(next.pose.yaw + std::clamp(alpha, -cfg.turn_rate, cfg.turn_rate));
    next.clear_streak = 0;
    return next;
  }

  const Vec2 heading{std::cos(next.pose.yaw), std::sin(next.pose.yaw)};
  const Vec2 target = next.pose.position + cfg.step_len * heading;
  if (body_blocked(scene, target, next.radius, cfg.step_over)) {
    if (!next.collided) {
      ++next.collisions;
    }
    next.collided = true;
    next.clear_streak = 0;
    return next;
  }
  next.pose.position = target;
  next.collided = false;
  ++next.clear_streak;
  next.pose.yaw = wrap_angle(next.pose.yaw + alpha);

  if (next.goal && next.clear_streak >= cfg.homing_delay) {
    const double bearing = relative_bearing(next.pose, *next.goal);
    next.pose.yaw = wrap_angle(next.pose.yaw + std::clamp(bearing, -cfg.homing_rate, cfg.homing_rate));
  }
  return next;
}

}  // namespace guideglass
