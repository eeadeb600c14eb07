#include "stereosim/pose_eval.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <array>
#include <cmath>

#include "stereosim/rng.hpp"

namespace stereosim {

namespace {

constexpr double kRad2Deg = 57.29577951308232;

Vec3 box_local_from_world(const OrientedBox3D& box, const Vec3& p) {
  return box.pose.rotation.transpose() * (p - box.pose.translation) /
         box.pose.scale;
}

bool axis_aligned(const Mat3& r, double tol = 1e-12) {
  // Every column is a signed unit axis.
  for (int c = 0; c < 3; ++c) {
    int hits = 0;
    for (int rrow = 0; rrow < 3; ++rrow) {
      const double v = std::abs(r(rrow, c));
      if (std::abs(v - 1.0) <= tol)
        ++hits;
      else if (v > tol)
        return false;
    }
    if (hits != 1) return false;
  }
  return true;
}

struct Aabb {
  Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
  Vec3 hi = Vec3::Constant(-std::numeric_limits<double>::infinity());
  void extend(const Vec3& p) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
};

Aabb corner_aabb(const OrientedBox3D& box) {
  Aabb out;
  for (const Vec3& c : box.corners()) out.extend(c);
  return out;
}

double residual_rms(const SimilarityPose& pose, const std::vector<Vec3>& nocs,
                    const std::vector<Vec3>& world) {
  double sum = 0.0;
  for (std::size_t i = 0; i < nocs.size(); ++i) {
    sum += (pose.apply(nocs[i]) - world[i]).squaredNorm();
  }
  return std::sqrt(sum / static_cast<double>(nocs.size()));
}

}  // namespace

std::vector<Vec3> OrientedBox3D::corners() const {
  std::vector<Vec3> out;
  out.reserve(8);
  for (int ix = 0; ix < 2; ++ix)
    for (int iy = 0; iy < 2; ++iy)
      for (int iz = 0; iz < 2; ++iz) {
        const Vec3 local(0.5 + (ix ? 0.5 : -0.5) * extents.x(),
                         0.5 + (iy ? 0.5 : -0.5) * extents.y(),
                         0.5 + (iz ? 0.5 : -0.5) * extents.z());
        out.push_back(pose.apply(local));
      }
  return out;
}

bool OrientedBox3D::contains(const Vec3& world_point) const {
  const Vec3 q = box_local_from_world(*this, world_point);
  for (int i = 0; i < 3; ++i) {
    if (std::abs(q[i] - 0.5) > 0.5 * extents[i]) return false;
  }
  return true;
}

SimilarityFit fit_similarity(const std::vector<Vec3>& nocs_points,
                             const std::vector<Vec3>& world_points) {
  const std::size_t n = nocs_points.size();
  if (n != world_points.size()) {
    throw SizeMismatch("fit_similarity: point lists differ in length");
  }
  if (n < 3) {
    throw DegenerateConfiguration("fit_similarity: need at least 3 points");
  }

  Vec3 mu_n = Vec3::Zero(), mu_w = Vec3::Zero();
  for (std::size_t i = 0; i < n; ++i) {
    mu_n += nocs_points[i];
    mu_w += world_points[i];
  }
  mu_n /= static_cast<double>(n);
  mu_w /= static_cast<double>(n);

  Mat3 cov = Mat3::Zero();
  double var_n = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 dn = nocs_points[i] - mu_n;
    const Vec3 dw = world_points[i] - mu_w;
    cov += dw * dn.transpose();
    var_n += dn.squaredNorm();
  }
  cov /= static_cast<double>(n);
  var_n /= static_cast<double>(n);

  Eigen::JacobiSVD<Mat3> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vec3 d = svd.singularValues();
  if (!(d(0) > 0.0) || d(1) <= 1e-12 * d(0)) {
    throw DegenerateConfiguration(
        "fit_similarity: covariance rank < 2 (collinear or coincident points)");
  }

  Vec3 s_diag = Vec3::Ones();
  if (svd.matrixU().determinant() * svd.matrixV().determinant() < 0.0) {
    s_diag(2) = -1.0;
  }

  SimilarityFit fit;
  fit.pose.rotation =
      svd.matrixU() * s_diag.asDiagonal() * svd.matrixV().transpose();
  fit.pose.scale = d.dot(s_diag) / var_n;
  if (!(fit.pose.scale > 0.0)) {
    throw DegenerateConfiguration("fit_similarity: non-positive scale");
  }
  fit.pose.translation = mu_w - fit.pose.scale * (fit.pose.rotation * mu_n);
  fit.residual_rms = residual_rms(fit.pose, nocs_points, world_points);
  return fit;
}

SimilarityFit fit_similarity_ransac(const std::vector<Vec3>& nocs_points,
                                    const std::vector<Vec3>& world_points,
                                    const RansacOptions& opts) {
  const std::size_t n = nocs_points.size();
  if (n != world_points.size()) {
    throw SizeMismatch("fit_similarity_ransac: point lists differ in length");
  }
  if (n < 4) {
    throw NoConsensus("fit_similarity_ransac: need at least 4 points");
  }

  RngStream rng(hash_combine(opts.seed, 0x52414e5341437631ull));
  const double thresh_sq = opts.inlier_threshold * opts.inlier_threshold;

  std::size_t best_count = 0;
  std::vector<std::uint8_t> best_mask(n, 0);

  std::vector<Vec3> sample_n(4), sample_w(4);
  for (int iter = 0; iter < opts.iterations; ++iter) {
    std::array<std::size_t, 4> idx{};
    for (int k = 0; k < 4; ++k) {
      bool fresh = false;
      while (!fresh) {
        idx[k] = rng.uniform_index(n);
        fresh = true;
        for (int j = 0; j < k; ++j) fresh &= idx[j] != idx[k];
      }
      sample_n[k] = nocs_points[idx[k]];
      sample_w[k] = world_points[idx[k]];
    }

    SimilarityPose model;
    try {
      model = fit_similarity(sample_n, sample_w).pose;
    } catch (const DegenerateConfiguration&) {
      continue;
    }

    std::size_t count = 0;
    std::vector<std::uint8_t> mask(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if ((model.apply(nocs_points[i]) - world_points[i]).squaredNorm() <=
          thresh_sq) {
        mask[i] = 1;
        ++count;
      }
    }
    if (count > best_count) {
      best_count = count;
      best_mask.swap(mask);
    }
  }

  if (best_count < 4) {
    throw NoConsensus("fit_similarity_ransac: no consensus set of size >= 4");
  }

  std::vector<Vec3> in_n, in_w;
  in_n.reserve(best_count);
  in_w.reserve(best_count);
  for (std::size_t i = 0; i < n; ++i) {
    if (best_mask[i]) {
      in_n.push_back(nocs_points[i]);
      in_w.push_back(world_points[i]);
    }
  }
  return fit_similarity(in_n, in_w);
}

double iou3d(const OrientedBox3D& a, const OrientedBox3D& b) {
  if (axis_aligned(a.pose.rotation) && axis_aligned(b.pose.rotation)) {
    const Aabb ba = corner_aabb(a);
    const Aabb bb = corner_aabb(b);
    double inter = 1.0;
    for (int i = 0; i < 3; ++i) {
      const double lo = std::max(ba.lo[i], bb.lo[i]);
      const double hi = std::min(ba.hi[i], bb.hi[i]);
      if (hi <= lo) return 0.0;
      inter *= hi - lo;
    }
    const double uni = a.volume() + b.volume() - inter;
    return uni > 0.0 ? inter / uni : 0.0;
  }

  // Voxel sampling over the union AABB: counts are consistent estimates of
  // the three volumes, so the ratio converges to the true IoU.
  Aabb bounds = corner_aabb(a);
  const Aabb bb = corner_aabb(b);
  bounds.extend(bb.lo);
  bounds.extend(bb.hi);

  constexpr int kRes = 64;
  const Vec3 span = bounds.hi - bounds.lo;
  std::int64_t na = 0, nb = 0, nab = 0;
  for (int ix = 0; ix < kRes; ++ix) {
    const double x = bounds.lo.x() + (ix + 0.5) * span.x() / kRes;
    for (int iy = 0; iy < kRes; ++iy) {
      const double y = bounds.lo.y() + (iy + 0.5) * span.y() / kRes;
      for (int iz = 0; iz < kRes; ++iz) {
        const double z = bounds.lo.z() + (iz + 0.5) * span.z() / kRes;
        const Vec3 p(x, y, z);
        const bool ina = a.contains(p);
        const bool inb = b.contains(p);
        na += ina;
        nb += inb;
        nab += ina && inb;
      }
    }
  }
  const std::int64_t nu = na + nb - nab;
  return nu > 0 ? static_cast<double>(nab) / static_cast<double>(nu) : 0.0;
}

PoseErrors pose_error(const SimilarityPose& pred, const SimilarityPose& gt,
                      Symmetry symmetry) {
  PoseErrors out;
  if (symmetry == Symmetry::AxisZ) {
    // Minimizing over spins of gt about its z axis leaves exactly the angle
    // between the two z axes.
    const Vec3 zp = pred.rotation.col(2);
    const Vec3 zg = gt.rotation.col(2);
    out.rot_deg = std::acos(std::clamp(zp.dot(zg), -1.0, 1.0)) * kRad2Deg;
  } else {
    const double tr = (pred.rotation * gt.rotation.transpose()).trace();
    out.rot_deg = std::acos(std::clamp((tr - 1.0) / 2.0, -1.0, 1.0)) * kRad2Deg;
  }
  out.trans_cm = (pred.translation - gt.translation).norm() * 100.0;
  return out;
}

PoseReport aggregate_pose(const std::vector<PoseInstance>& instances) {
  if (instances.empty()) {
    throw EmptyInput("aggregate_pose: empty instance list");
  }

  PoseReport report;
  report.n_instances = instances.size();
  report.raw_errors.reserve(instances.size());
  report.raw_ious.reserve(instances.size());

  std::size_t iou25 = 0, iou50 = 0, iou75 = 0;
  std::size_t a52 = 0, a55 = 0, a102 = 0, a105 = 0, a1010 = 0;
  for (const PoseInstance& inst : instances) {
    const PoseErrors err = pose_error(inst.pred, inst.gt, inst.symmetry);
    report.raw_errors.push_back(err);

    OrientedBox3D box_pred{inst.pred, inst.extents};
    OrientedBox3D box_gt{inst.gt, inst.extents};
    const double iou = iou3d(box_pred, box_gt);
    report.raw_ious.push_back(iou);

    iou25 += iou >= 0.25;
    iou50 += iou >= 0.50;
    iou75 += iou >= 0.75;
    a52 += err.rot_deg <= 5.0 && err.trans_cm <= 2.0;
    a55 += err.rot_deg <= 5.0 && err.trans_cm <= 5.0;
    a102 += err.rot_deg <= 10.0 && err.trans_cm <= 2.0;
    a105 += err.rot_deg <= 10.0 && err.trans_cm <= 5.0;
    a1010 += err.rot_deg <= 10.0 && err.trans_cm <= 10.0;
  }

  const double denom = static_cast<double>(instances.size());
  report.iou25 = 100.0 * iou25 / denom;
  report.iou50 = 100.0 * iou50 / denom;
  report.iou75 = 100.0 * iou75 / denom;
  report.acc_5deg_2cm = 100.0 * a52 / denom;
  report.acc_5deg_5cm = 100.0 * a55 / denom;
  report.acc_10deg_2cm = 100.0 * a102 / denom;
  report.acc_10deg_5cm = 100.0 * a105 / denom;
  report.acc_10deg_10cm = 100.0 * a1010 / denom;
  return report;
}

}  // namespace stereosim
