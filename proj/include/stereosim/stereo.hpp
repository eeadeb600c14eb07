#pragma once

#include <limits>
#include <vector>

#include "stereosim/camera.hpp"
#include "stereosim/image.hpp"

namespace stereosim {

enum class CostMetric { SAD, Census };

struct MatcherConfig {
  int max_disparity = 128;
  int block_radius = 5;  // 11x11 window
  CostMetric metric = CostMetric::SAD;
  double lr_threshold = 1.0;       // px
  double uniqueness_margin = 0.05; // best must beat runner-up by this ratio
  int median_kernel = 5;
  double min_disparity = kMinDisparityPx;  // depth conversion floor
};

struct DisparityMap {
  ImageF values;              // sub-pixel disparity, >= 0 where valid
  Image<std::uint8_t> valid;

  DisparityMap() = default;
  DisparityMap(int width, int height)
      : values(width, height, 1, 0.0f), valid(width, height, 1, 0) {}

  int width() const { return values.width(); }
  int height() const { return values.height(); }
  std::size_t valid_count() const {
    std::size_t n = 0;
    for (int y = 0; y < height(); ++y)
      for (int x = 0; x < width(); ++x) n += valid.at(x, y) != 0;
    return n;
  }
};

// Left-referenced matching costs. cost(y,x,d) compares the block around
// left(y,x) with the block around right(y,x-d); wherever either block
// window exits its image the cost is +inf and can never win. The same
// storage serves as the right-referenced volume through the identity
// cost_right(y,x,d) = cost_left(y,x+d,d).
class CostVolume {
 public:
  CostVolume() = default;
  CostVolume(int width, int height, int max_disparity, int block_radius,
             CostMetric metric)
      : width_(width),
        height_(height),
        max_disparity_(max_disparity),
        block_radius_(block_radius),
        metric_(metric),
        costs_(static_cast<std::size_t>(width) * height * (max_disparity + 1),
               kInf) {}

  static constexpr float kInf = std::numeric_limits<float>::infinity();

  int width() const { return width_; }
  int height() const { return height_; }
  int max_disparity() const { return max_disparity_; }
  int block_radius() const { return block_radius_; }
  CostMetric metric() const { return metric_; }

  float& at(int x, int y, int d) { return costs_[index(x, y, d)]; }
  float at(int x, int y, int d) const { return costs_[index(x, y, d)]; }

  // Right-referenced view: compares the block around right(y,x) with the
  // block around left(y,x+d).
  float right_at(int x, int y, int d) const {
    const int xl = x + d;
    return xl < width_ ? costs_[index(xl, y, d)] : kInf;
  }

 private:
  std::size_t index(int x, int y, int d) const {
    return (static_cast<std::size_t>(y) * width_ + x) *
               (max_disparity_ + 1) +
           d;
  }

  int width_ = 0;
  int height_ = 0;
  int max_disparity_ = 0;
  int block_radius_ = 0;
  CostMetric metric_ = CostMetric::SAD;
  std::vector<float> costs_;
};

CostVolume compute_cost_volume(const ImageF& left, const ImageF& right,
                               const MatcherConfig& cfg);

// Winner-take-all with quadratic sub-pixel refinement. Ties break toward
// the smallest disparity; the parabola offset is clamped to [-0.5, 0.5]
// and forced to 0 at the volume boundary or on a degenerate (flat) fit.
DisparityMap wta_subpixel(const CostVolume& volume, const MatcherConfig& cfg);

// Same procedure on the right-referenced view of the volume.
DisparityMap wta_subpixel_right(const CostVolume& volume,
                                const MatcherConfig& cfg);

DisparityMap lr_consistency(const DisparityMap& disp_left,
                            const DisparityMap& disp_right, double threshold);

DisparityMap uniqueness_filter(const CostVolume& volume,
                               const DisparityMap& disp,
                               const MatcherConfig& cfg);

DisparityMap median_filter(const DisparityMap& disp, int kernel);

// Full pipeline: cost volume -> WTA+sub-pixel both directions -> left/right
// consistency -> uniqueness -> median -> disparity to depth (invalid -> 0).
DepthMap simulate_depth(const ImageF& ir_left, const ImageF& ir_right,
                        const StereoRig& rig, const MatcherConfig& cfg);

DepthMap disparity_map_to_depth(const DisparityMap& disp, const StereoRig& rig,
                                const MatcherConfig& cfg);

}  // namespace stereosim
