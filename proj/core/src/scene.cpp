#include "guideglass/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace guideglass {

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

double Rect::distance_to(Vec2 p) const
{
  const double dx = std::max({x0 - p.x, 0.0, p.x - x1});
  const double dy = std::max({y0 - p.y, 0.0, p.y - y1});
  return std::hypot(dx, dy);
}

bool Rect::encloses(const Rect & other) const
{
  return other.x0 >= x0 && other.x1 <= x1 && other.y0 >= y0 && other.y1 <= y1;
}

std::string_view to_string(Material m)
{
  switch (m) {
    case Material::opaque: return "opaque";
    case Material::ir_transparent: return "ir_transparent";
    case Material::frosted: return "frosted";
  }
  return "?";
}

Material parse_material(std::string_view name)
{
  if (name == "opaque") {
    return Material::opaque;
  }
  if (name == "ir_transparent" || name == "glass") {
    return Material::ir_transparent;
  }
  if (name == "frosted") {
    return Material::frosted;
  }
  throw std::invalid_argument("unknown material '" + std::string(name) + "'");
}

void Scene::validate() const
{
  if (!bounds.non_degenerate()) {
    throw std::invalid_argument("scene: bounds are degenerate");
  }
  if (!bounds.contains(start.position)) {
    throw std::invalid_argument("scene: start lies outside the bounds");
  }
  if (!bounds.contains(goal)) {
    throw std::invalid_argument("scene: goal lies outside the bounds");
  }
  if (!(start.camera_height > 0.0)) {
    throw std::invalid_argument("scene: camera height must be positive");
  }
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    const Obstacle & o = obstacles[i];
    const std::string where = "scene: obstacle " + std::to_string(i);
    if (!o.footprint.non_degenerate()) {
      throw std::invalid_argument(where + " has a degenerate footprint");
    }
    if (!(o.height > 0.0)) {
      throw std::invalid_argument(where + " must have positive height");
    }
    if (!bounds.encloses(o.footprint)) {
      throw std::invalid_argument(where + " extends outside the bounds");
    }
  }
}

double wrap_angle(double a)
{
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a <= -std::numbers::pi) {
    a += two_pi;
  } else if (a > std::numbers::pi) {
    a -= two_pi;
  }
  return a;
}

double relative_bearing(const Pose & pose, Vec2 target)
{
  const Vec2 d = target - pose.position;
  return wrap_angle(std::atan2(d.y, d.x) - pose.yaw);
}

}  // namespace guideglass
