#pragma once

#include <span>
#include <vector>

#include "stereosim/camera.hpp"
#include "stereosim/image.hpp"

namespace stereosim {

// Per-pixel blend weight between a raw depth map and a predicted one.
struct ConfidenceMap {
  ImageF values;  // in [0,1]
};

enum class MaskScope { AllObjects, Challenging };

struct EvalMask {
  Image<std::uint8_t> region;  // nonzero = evaluate
  MaskScope scope = MaskScope::AllObjects;
};

// Depth restoration metrics. Deltas are percentages. All values are
// NaN ("undefined") when n_pixels == 0. Pixels with invalid predictions
// inside the mask count as failures for the delta metrics and enter
// RMSE/REL/MAE with prediction 0; pass skip_invalid to exclude them.
struct MetricsReport {
  double rmse = 0.0;
  double rel = 0.0;
  double mae = 0.0;
  double delta_105 = 0.0;
  double delta_110 = 0.0;
  double delta_125 = 0.0;
  std::size_t n_pixels = 0;
};

struct LossWeights {
  double w_final = 1.0;
  double w_initial = 1.0;
  double w_n = 1.0;
  double w_d = 1.0;
  double w_g = 1.0;
  double fg_boost = 2.0;
};

struct LossTerms {
  double normal = 0.0;
  double depth = 0.0;
  double gradient = 0.0;
  double combined = 0.0;  // w_n*normal + w_d*depth + w_g*gradient
};

struct RestorationLoss {
  LossTerms final_terms;
  LossTerms initial_terms;
  double total = 0.0;  // w_final * final + w_initial * initial
};

struct GradientMap {
  ImageF values;               // 2 channels: d/dx, d/dy
  Image<std::uint8_t> valid;   // per-pixel
};

struct NormalMap {
  ImageF values;               // 3 channels, camera frame, unit where valid
  Image<std::uint8_t> valid;
};

inline constexpr int kEvalHeight = 126;
inline constexpr int kEvalWidth = 224;

// Deterministic pairwise sum in the order given (row-major collection
// sites use this so metric reports are bit-reproducible).
double pairwise_sum(std::span<const double> terms);

DepthMap resize_for_eval(const DepthMap& map, int target_width = kEvalWidth,
                         int target_height = kEvalHeight);
EvalMask resize_for_eval(const EvalMask& mask, int target_width = kEvalWidth,
                         int target_height = kEvalHeight);

MetricsReport compute_metrics(const DepthMap& pred, const DepthMap& gt,
                              const EvalMask& mask, bool skip_invalid = false);

// Per-pixel convex blend C*pred + (1-C)*raw. Where raw is invalid the
// output is the prediction regardless of C; where only the prediction is
// invalid the raw value wins.
DepthMap fuse_confidence(const DepthMap& raw, const DepthMap& pred,
                         const ConfidenceMap& conf);

NormalMap normals_from_depth(const DepthMap& depth, const Intrinsics& k);

GradientMap gradient_map(const DepthMap& depth);

RestorationLoss restoration_loss(const DepthMap& pred_final,
                                 const DepthMap& pred_initial,
                                 const DepthMap& gt,
                                 const Image<std::uint8_t>& fg_mask,
                                 const Intrinsics& k, const LossWeights& w);

}  // namespace stereosim
