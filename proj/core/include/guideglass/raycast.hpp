#pragma once

#include <optional>
#include <random>

#include "guideglass/cueing.hpp"
#include "guideglass/scene.hpp"
#include "guideglass/sensors.hpp"
#include "guideglass/wayfinding.hpp"

namespace guideglass {

/// Structured-light depth sensor. Reported depth is the camera-frame z of the
/// first surface hit, the quantity a depth image stores.
struct DepthSensorConfig
{
  double min_depth{0.4};
  double max_depth{4.0};
  bool noise_enabled{false};
  double noise_amplitude{0.02};  // uniform in [-a, a]; keep a <= epsilon / 2
  int scan_row{-1};              // -1 selects the bottom row

  void validate() const;
  int resolved_row(const CameraIntrinsics & k) const;
};

struct Vec3
{
  double x{0.0};
  double y{0.0};
  double z{0.0};  // height
};

/// World ray through pixel (u, v). The direction's component along the optical
/// axis is exactly 1, so a hit parameter t is also the hit's depth.
struct PixelRay
{
  Vec3 origin;
  Vec3 dir;
};

PixelRay pixel_ray(const Pose & pose, const CameraIntrinsics & k, double u, double v);

/// Parameter of the first surface of scene hit by ray, ignoring IR-transparent
/// obstacles. nullopt if nothing is hit (ray pointing at or above the horizon
/// with no obstacle in the way).
std::optional<double> first_depth_hit(const Scene & scene, const PixelRay & ray);

/// Renders the scan row. Throws std::invalid_argument if pose is outside the
/// scene bounds. The overload without an engine requires noise to be disabled.
DepthScanLine render_depth_scanline(const Scene & scene, const Pose & pose, const CameraIntrinsics & k,
                                    const DepthSensorConfig & cfg);
DepthScanLine render_depth_scanline(const Scene & scene, const Pose & pose, const CameraIntrinsics & k,
                                    const DepthSensorConfig & cfg, std::mt19937_64 & noise);

struct ConeHit
{
  double distance{0.0};
  Vec2 point;
};

/// Closest point of rect inside the horizontal wedge |bearing - heading| <= half_angle
/// seen from apex. half_angle must not exceed pi / 2.
std::optional<ConeHit> nearest_in_cone(const Rect & rect, Vec2 apex, double heading, double half_angle);

/// Distance along the horizontal ray from origin at heading to the first point of
/// rect; 0 when origin lies inside, nullopt on a miss.
std::optional<double> ray_rect_distance(Vec2 origin, double heading, const Rect & rect);

/// Ultrasonic echo model: the nearest obstacle surface of any material inside the
/// cone, clamped to [min_range, max_range]; the max-range sentinel otherwise.
UltrasonicReading simulate_ultrasonic(const Scene & scene, const Pose & pose, const UltrasonicConfig & cfg);

/// Which cue region holds the nearest obstacle within lookahead meters and
/// the guidance field of view; none when no obstacle is that close.
ObstacleRegion obstacle_region_truth(const Scene & scene, const Pose & pose, const CueRegions & regions,
                                     double lookahead);

}  // namespace guideglass
