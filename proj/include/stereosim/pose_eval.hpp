#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stereosim/camera.hpp"

namespace stereosim {

// Scale + rotation + translation: p_world = scale * R * p + t.
struct SimilarityPose {
  double scale = 1.0;
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  Vec3 apply(const Vec3& p) const {
    return scale * (rotation * p) + translation;
  }
};

struct SimilarityFit {
  SimilarityPose pose;
  double residual_rms = 0.0;
};

// Box spanned by a similarity pose applied to the unit NOCS cube: in NOCS
// space the box is centered at (0.5, 0.5, 0.5) with side lengths `extents`.
struct OrientedBox3D {
  SimilarityPose pose;
  Vec3 extents = Vec3::Ones();

  std::vector<Vec3> corners() const;
  double volume() const {
    return extents.prod() * pose.scale * pose.scale * pose.scale;
  }
  bool contains(const Vec3& world_point) const;
};

enum class Symmetry { None, AxisZ };

struct PoseErrors {
  double rot_deg = 0.0;
  double trans_cm = 0.0;
};

struct PoseInstance {
  SimilarityPose pred;
  SimilarityPose gt;
  Vec3 extents = Vec3::Ones();  // NOCS-space box dimensions (shared)
  std::string category;
  Symmetry symmetry = Symmetry::None;
};

struct PoseReport {
  double iou25 = 0.0, iou50 = 0.0, iou75 = 0.0;  // percentages
  double acc_5deg_2cm = 0.0;
  double acc_5deg_5cm = 0.0;
  double acc_10deg_2cm = 0.0;
  double acc_10deg_5cm = 0.0;
  double acc_10deg_10cm = 0.0;
  std::size_t n_instances = 0;
  std::vector<PoseErrors> raw_errors;
  std::vector<double> raw_ious;
};

// Closed-form least-squares similarity transform from NOCS-space points to
// world-space points (centered covariance SVD with reflection guard, scale
// from the variance ratio). Throws DegenerateConfiguration when the point
// configuration cannot determine a rotation (covariance rank < 2).
SimilarityFit fit_similarity(const std::vector<Vec3>& nocs_points,
                             const std::vector<Vec3>& world_points);

struct RansacOptions {
  double inlier_threshold = 0.01;  // meters
  int iterations = 256;
  std::uint64_t seed = 0;
};

SimilarityFit fit_similarity_ransac(const std::vector<Vec3>& nocs_points,
                                    const std::vector<Vec3>& world_points,
                                    const RansacOptions& opts);

// Exact for axis-aligned pairs; voxel-sampled (64^3 over the union AABB)
// for the general oriented case. The sampling error is validated against
// Monte Carlo in the acceptance suite (< 0.01 on random pairs).
double iou3d(const OrientedBox3D& a, const OrientedBox3D& b);

PoseErrors pose_error(const SimilarityPose& pred, const SimilarityPose& gt,
                      Symmetry symmetry = Symmetry::None);

PoseReport aggregate_pose(const std::vector<PoseInstance>& instances);

}  // namespace stereosim
