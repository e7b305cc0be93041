#pragma once

#include <string_view>
#include <vector>

#include "guideglass/geometry.hpp"

namespace guideglass {

// World frame: x and y span the floor, with +y to the right of +x, so yaw (the
// heading measured from +x toward +y) grows with right turns. Heights are
// measured up from the floor.

struct Vec2
{
  double x{0.0};
  double y{0.0};

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

double norm(Vec2 v);

/// Axis-aligned rectangle [x0, x1] x [y0, y1].
struct Rect
{
  double x0{0.0};
  double y0{0.0};
  double x1{0.0};
  double y1{0.0};

  bool contains(Vec2 p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
  bool non_degenerate() const { return x1 > x0 && y1 > y0; }
  /// Euclidean distance from p to the closed rectangle (0 inside).
  double distance_to(Vec2 p) const;
  /// True when rect lies entirely inside this one.
  bool encloses(const Rect & other) const;
};

enum class Material { opaque, ir_transparent, frosted };

std::string_view to_string(Material m);
/// Throws std::invalid_argument for unknown names.
Material parse_material(std::string_view name);

/// Extruded box obstacle.
struct Obstacle
{
  Rect footprint;
  double height{1.0};
  Material material{Material::opaque};
};

struct Pose
{
  Vec2 position;
  double yaw{0.0};
  double camera_height{1.65};
  double camera_pitch{deg_to_rad(30.0)};  // downward tilt
};

struct Scene
{
  Rect bounds{0.0, 0.0, 10.0, 10.0};
  std::vector<Obstacle> obstacles;
  Vec2 goal;
  Pose start;

  /// Throws std::invalid_argument when an invariant is broken.
  void validate() const;
};

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

/// Heading-relative bearing of target seen from pose (positive = right).
double relative_bearing(const Pose & pose, Vec2 target);

}  // namespace guideglass
