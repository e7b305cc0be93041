#include "guideglass/raycast.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace guideglass {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Slab test on one axis. Narrows [t_near, t_far]; returns false on a miss.
bool clip_axis(double origin, double dir, double lo, double hi, double & t_near, double & t_far)
{
  if (dir == 0.0) {
    return origin >= lo && origin <= hi;
  }
  double t0 = (lo - origin) / dir;
  double t1 = (hi - origin) / dir;
  if (t0 > t1) {
    std::swap(t0, t1);
  }
  t_near = std::max(t_near, t0);
  t_far = std::min(t_far, t1);
  return t_near <= t_far;
}

std::optional<double> box_hit(const Obstacle & o, const PixelRay & ray)
{
  double t_near = -kInf;
  double t_far = kInf;
  if (!clip_axis(ray.origin.x, ray.dir.x, o.footprint.x0, o.footprint.x1, t_near, t_far) ||
      !clip_axis(ray.origin.y, ray.dir.y, o.footprint.y0, o.footprint.y1, t_near, t_far) ||
      !clip_axis(ray.origin.z, ray.dir.z, 0.0, o.height, t_near, t_far)) {
    return std::nullopt;
  }
  if (t_far < 0.0) {
    return std::nullopt;
  }
  return std::max(t_near, 0.0);
}

// 2D ray/rectangle entry distance along a unit direction.
std::optional<double> ray_rect_entry(Vec2 origin, Vec2 dir, const Rect & r)
{
  double t_near = -kInf;
  double t_far = kInf;
  if (!clip_axis(origin.x, dir.x, r.x0, r.x1, t_near, t_far) ||
      !clip_axis(origin.y, dir.y, r.y0, r.y1, t_near, t_far) || t_far < 0.0) {
    return std::nullopt;
  }
  return std::max(t_near, 0.0);
}

Vec2 closest_on_segment(Vec2 a, Vec2 b, Vec2 p)
{
  const Vec2 ab = b - a;
  const double len2 = ab.x * ab.x + ab.y * ab.y;
  double t = len2 > 0.0 ? ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return a + t * ab;
}

DepthScanLine render_impl(const Scene & scene, const Pose & pose, const CameraIntrinsics & k,
                          const DepthSensorConfig & cfg, std::mt19937_64 * noise)
{
  if (!scene.bounds.contains(pose.position)) {
    throw std::invalid_argument("render_depth_scanline: pose outside the scene bounds");
  }
  const int row = cfg.resolved_row(k);
  DepthScanLine line;
  line.row = row;
  line.depths.resize(static_cast<std::size_t>(k.width), kNoReturn);
  std::uniform_real_distribution<double> jitter(-cfg.noise_amplitude, cfg.noise_amplitude);
  for (int u = 0; u < k.width; ++u) {
    const PixelRay ray = pixel_ray(pose, k, u, row);
    const std::optional<double> hit = first_depth_hit(scene, ray);
    double z = hit ? *hit : kNoReturn;
    if (noise != nullptr) {
      // Drawn for every column so the stream position depends only on the frame count.
      const double n = jitter(*noise);
      if (hit) {
        z += n;
      }
    }
    line.depths[static_cast<std::size_t>(u)] = (hit && z >= cfg.min_depth && z <= cfg.max_depth) ? z : kNoReturn;
  }
  return line;
}

}  // namespace

void DepthSensorConfig::validate() const
{
  if (!(min_depth > 0.0 && min_depth < max_depth)) {
    throw std::invalid_argument("depth sensor: need 0 < min_depth < max_depth");
  }
  if (!(noise_amplitude >= 0.0)) {
    throw std::invalid_argument("depth sensor: noise amplitude must be non-negative");
  }
}

int DepthSensorConfig::resolved_row(const CameraIntrinsics & k) const
{
  if (scan_row < 0) {
    return k.height - 1;
  }
  if (scan_row >= k.height) {
    throw std::invalid_argument("depth sensor: scan row outside the image");
  }
  return scan_row;
}

PixelRay pixel_ray(const Pose & pose, const CameraIntrinsics & k, double u, double v)
{
  const double cy = std::cos(pose.yaw);
  const double sy = std::sin(pose.yaw);
  const double cp = std::cos(pose.camera_pitch);
  const double sp = std::sin(pose.camera_pitch);
  const double xn = (u - k.u0) / k.f;
  const double yn = (v - k.v0) / k.f;
  // Camera axes in the world: right = (-sy, cy, 0); forward = (cy, sy, 0);
  // optical axis = cp * forward - sp * up; image-down = -(sp * forward + cp * up).
  PixelRay ray;
  ray.origin = {pose.position.x, pose.position.y, pose.camera_height};
  const double along = cp - yn * sp;
  ray.dir = {xn * -sy + along * cy, xn * cy + along * sy, -sp - yn * cp};
  return ray;
}

std::optional<double> first_depth_hit(const Scene & scene, const PixelRay & ray)
{
  double best = kInf;
  if (ray.dir.z < 0.0) {
    best = ray.origin.z / -ray.dir.z;
  }
  for (const Obstacle & o : scene.obstacles) {
    if (o.material == Material::ir_transparent) {
      continue;
    }
    if (const auto t = box_hit(o, ray); t && *t < best) {
      best = *t;
    }
  }
  if (!std::isfinite(best)) {
    return std::nullopt;
  }
  return best;
}

DepthScanLine render_depth_scanline(const Scene & scene, const Pose & pose, const CameraIntrinsics & k,
                                    const DepthSensorConfig & cfg)
{
  if (cfg.noise_enabled) {
    throw std::logic_error("render_depth_scanline: noise enabled but no noise engine supplied");
  }
  return render_impl(scene, pose, k, cfg, nullptr);
}

DepthScanLine render_depth_scanline(const Scene & scene, const Pose & pose, const CameraIntrinsics & k,
                                    const DepthSensorConfig & cfg, std::mt19937_64 & noise)
{
  return render_impl(scene, pose, k, cfg, cfg.noise_enabled ? &noise : nullptr);
}

std::optional<ConeHit> nearest_in_cone(const Rect & rect, Vec2 apex, double heading, double half_angle)
{
  if (rect.contains(apex)) {
    return ConeHit{0.0, apex};
  }
  // Small slack so points exactly on the cone boundary count as inside.
  const double tol = 1e-12;
  auto in_cone = [&](Vec2 p) {
    const Vec2 d = p - apex;
    return std::abs(wrap_angle(std::atan2(d.y, d.x) - heading)) <= half_angle + tol;
  };

  std::optional<ConeHit> best;
  auto consider = [&](Vec2 p) {
    const double dist = norm(p - apex);
    if (!best || dist < best->distance) {
      best = ConeHit{dist, p};
    }
  };

  const Vec2 corners[4] = {{rect.x0, rect.y0}, {rect.x1, rect.y0}, {rect.x1, rect.y1}, {rect.x0, rect.y1}};
  for (const Vec2 & c : corners) {
    if (in_cone(c)) {
      consider(c);
    }
  }
  for (const double side : {-1.0, 1.0}) {
    const double a = heading + side * half_angle;
    const Vec2 dir{std::cos(a), std::sin(a)};
    if (const auto t = ray_rect_entry(apex, dir, rect)) {
      consider(apex + *t * dir);
    }
  }
  for (int i = 0; i < 4; ++i) {
    const Vec2 foot = closest_on_segment(corners[i], corners[(i + 1) % 4], apex);
    if (in_cone(foot)) {
      consider(foot);
    }
  }
  return best;
}

std::optional<double> ray_rect_distance(Vec2 origin, double heading, const Rect & rect)
{
  return ray_rect_entry(origin, {std::cos(heading), std::sin(heading)}, rect);
}

UltrasonicReading simulate_ultrasonic(const Scene & scene, const Pose & pose, const UltrasonicConfig & cfg)
{
  double nearest = kInf;
  for (const Obstacle & o : scene.obstacles) {
    if (const auto hit = nearest_in_cone(o.footprint, pose.position, pose.yaw, cfg.half_fov)) {
      nearest = std::min(nearest, hit->distance);
    }
  }
  if (!(nearest <= cfg.max_range)) {
    return UltrasonicReading::max_range();
  }
  return UltrasonicReading::at(std::max(nearest, cfg.min_range));
}

ObstacleRegion obstacle_region_truth(const Scene & scene, const Pose & pose, const CueRegions & regions,
                                     double lookahead)
{
  std::optional<ConeHit> nearest;
  for (const Obstacle & o : scene.obstacles) {
    const auto hit = nearest_in_cone(o.footprint, pose.position, pose.yaw, regions.fov / 2.0);
    if (hit && hit->distance <= lookahead && (!nearest || hit->distance < nearest->distance)) {
      nearest = hit;
    }
  }
  if (!nearest) {
    return ObstacleRegion::none;
  }
  if (nearest->distance == 0.0) {
    return ObstacleRegion::front;
  }
  const double bearing = relative_bearing(pose, nearest->point);
  if (std::abs(bearing) <= regions.mid_half) {
    return ObstacleRegion::front;
  }
  return bearing < 0.0 ? ObstacleRegion::left : ObstacleRegion::right;
}

}  // namespace guideglass
