#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "stereosim/errors.hpp"

namespace stereosim {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Pinhole intrinsics. Convention: x right, y down, z forward; pixel (0,0)
// is the top-left corner, pixel centers at integer + 0.5.
struct Intrinsics {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 0;
  int height = 0;

  bool valid() const {
    return fx > 0.0 && fy > 0.0 && width > 0 && height > 0 && cx >= 0.0 &&
           cx < width && cy >= 0.0 && cy < height;
  }

  bool contains(const Vec2& px) const {
    return px.x() >= 0.0 && px.x() < width && px.y() >= 0.0 && px.y() < height;
  }

  // Same field of view at a different resolution.
  Intrinsics scaled_to(int new_width, int new_height) const {
    const double sx = static_cast<double>(new_width) / width;
    const double sy = static_cast<double>(new_height) / height;
    return {fx * sx, fy * sy, cx * sx, cy * sy, new_width, new_height};
  }
};

// Rigid transform: p_out = R * p_in + t.
struct RigidPose {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  static RigidPose identity() { return RigidPose{}; }

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }

  Vec3 rotate(const Vec3& v) const { return rotation * v; }

  RigidPose inverse() const {
    RigidPose inv;
    inv.rotation = rotation.transpose();
    inv.translation = -(inv.rotation * translation);
    return inv;
  }

  // this ∘ other: applies `other` first.
  RigidPose operator*(const RigidPose& other) const {
    RigidPose out;
    out.rotation = rotation * other.rotation;
    out.translation = rotation * other.translation + translation;
    return out;
  }

  bool is_rigid(double tol = 1e-9) const {
    const Mat3 err = rotation.transpose() * rotation - Mat3::Identity();
    return err.cwiseAbs().maxCoeff() <= tol &&
           std::abs(rotation.determinant() - 1.0) <= tol;
  }
};

// Rectified active-stereo rig: both IR cameras share the intrinsics and
// orientation, the right camera sits at +baseline along the left camera's
// x axis, the projector at +projector_offset. The color camera hangs off
// the left IR camera via color_offset (identity = co-located).
struct StereoRig {
  Intrinsics intrinsics;
  double baseline = 0.055;
  RigidPose left_pose;
  double projector_offset = 0.0275;
  RigidPose color_offset;

  RigidPose right_pose() const {
    RigidPose offset;
    offset.translation = Vec3(baseline, 0.0, 0.0);
    return left_pose * offset;
  }

  RigidPose projector_pose() const {
    RigidPose offset;
    offset.translation = Vec3(projector_offset, 0.0, 0.0);
    return left_pose * offset;
  }

  RigidPose color_pose() const { return left_pose * color_offset; }
};

inline constexpr double kMinDisparityPx = 0.1;

Vec2 project(const Vec3& point, const Intrinsics& k);
Vec3 unproject(const Vec2& pixel, double depth, const Intrinsics& k);

// fx * baseline / d for d above the floor; 0 (invalid) otherwise.
double disparity_to_depth(double d, double fx, double baseline,
                          double min_disparity = kMinDisparityPx);
double depth_to_disparity(double z, double fx, double baseline);

Vec3 transform_point(const Vec3& p, const RigidPose& pose);

// Reference rig: 1280x720 with fx = fy = 693 px, baseline 55 mm, projector
// halfway between the IR cameras; focal lengths scale proportionally with
// width at other resolutions. These numbers are echoed into the per-frame
// metadata so downstream consumers never have to assume them.
StereoRig default_rig(int width = 1280, int height = 720);

}  // namespace stereosim
