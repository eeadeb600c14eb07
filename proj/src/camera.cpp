#include "stereosim/camera.hpp"

namespace stereosim {

Vec2 project(const Vec3& point, const Intrinsics& k) {
  if (point.z() <= 0.0) {
    throw NonPositiveDepth("project: point.z must be positive");
  }
  return Vec2(k.fx * point.x() / point.z() + k.cx,
              k.fy * point.y() / point.z() + k.cy);
}

Vec3 unproject(const Vec2& pixel, double depth, const Intrinsics& k) {
  if (depth <= 0.0) {
    throw NonPositiveDepth("unproject: depth must be positive");
  }
  return Vec3((pixel.x() - k.cx) * depth / k.fx,
              (pixel.y() - k.cy) * depth / k.fy, depth);
}

double disparity_to_depth(double d, double fx, double baseline,
                          double min_disparity) {
  if (d <= min_disparity) return 0.0;
  return fx * baseline / d;
}

double depth_to_disparity(double z, double fx, double baseline) {
  return fx * baseline / z;
}

Vec3 transform_point(const Vec3& p, const RigidPose& pose) {
  return pose.apply(p);
}

StereoRig default_rig(int width, int height) {
  StereoRig rig;
  const double scale = static_cast<double>(width) / 1280.0;
  rig.intrinsics = {693.0 * scale, 693.0 * scale, width * 0.5, height * 0.5,
                    width, height};
  rig.baseline = 0.055;
  rig.projector_offset = 0.0275;
  return rig;
}

}  // namespace stereosim
