#pragma once

#include <numbers>

namespace guideglass {

inline constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Pinhole intrinsics of the depth sensor. Pixel coordinates grow rightward (u)
/// and downward (v); the defaults describe a 640x480 structured-light sensor.
struct CameraIntrinsics
{
  double f{525.0};   // focal length, pixels
  double u0{319.5};  // principal point, pixels
  double v0{239.5};
  int width{640};
  int height{480};

  /// Throws std::invalid_argument unless f > 0, 0 < u0 < width, 0 < v0 < height.
  void validate() const;

  /// Half of the horizontal field of view measured to the outer pixel centres
  /// on the wider side of the principal point.
  double horizontal_half_fov() const;
};

/// Point in the camera frame (x right, y down, z along the optical axis), meters.
struct CameraPoint
{
  double x{0.0};
  double y{0.0};
  double z{0.0};
};

/// Continuous pixel coordinate. May lie outside the sensor.
struct PixelPoint
{
  double u{0.0};
  double v{0.0};
};

/// Lifts a pixel with known depth z into the camera frame by similar triangles.
/// Throws std::invalid_argument when z <= 0.
CameraPoint backproject(PixelPoint p, double z, const CameraIntrinsics & k);

/// Standard pinhole projection; the inverse of backproject.
/// Throws std::invalid_argument when p.z <= 0.
PixelPoint project(const CameraPoint & p, const CameraIntrinsics & k);

/// Pixel width D(z) = f * w / z that a horizontal span of width_m meters
/// occupies at depth z. Throws std::invalid_argument unless z > 0 and width_m > 0.
double window_width_px(double z, double width_m, const CameraIntrinsics & k);

/// Steering angle (radians) toward the centre of the pixel span [u1, u2].
/// Positive turns right. Requires u1 <= u2.
double steering_angle(double u1, double u2, const CameraIntrinsics & k);

}  // namespace guideglass
