#include "guideglass/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace guideglass {

void CameraIntrinsics::validate() const
{
  if (!(f > 0.0)) {
    throw std::invalid_argument("camera: focal length must be positive");
  }
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("camera: image dimensions must be positive");
  }
  if (!(u0 > 0.0 && u0 < width)) {
    throw std::invalid_argument("camera: u0 must lie inside (0, width)");
  }
  if (!(v0 > 0.0 && v0 < height)) {
    throw std::invalid_argument("camera: v0 must lie inside (0, height)");
  }
}

double CameraIntrinsics::horizontal_half_fov() const
{
  const double extent = std::max(u0, (width - 1) - u0);
  return std::atan(extent / f);
}

CameraPoint backproject(PixelPoint p, double z, const CameraIntrinsics & k)
{
  if (!(z > 0.0)) {
    throw std::invalid_argument("backproject: depth must be positive");
  }
  const double scale = z / k.f;
  return {scale * (p.u - k.u0), scale * (p.v - k.v0), z};
}

PixelPoint project(const CameraPoint & p, const CameraIntrinsics & k)
{
  if (!(p.z > 0.0)) {
    throw std::invalid_argument("project: point must lie in front of the camera");
  }
  return {k.f * p.x / p.z + k.u0, k.f * p.y / p.z + k.v0};
}

double window_width_px(double z, double width_m, const CameraIntrinsics & k)
{
  if (!(z > 0.0)) {
    throw std::invalid_argument("window_width_px: depth must be positive");
  }
  if (!(width_m > 0.0)) {
    throw std::invalid_argument("window_width_px: traversable width must be positive");
  }
  return k.f * width_m / z;
}

double steering_angle(double u1, double u2, const CameraIntrinsics & k)
{
  return std::atan((u1 + u2 - 2.0 * k.u0) / (2.0 * k.f));
}

}  // namespace guideglass
