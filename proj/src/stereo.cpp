#include "stereosim/stereo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

namespace stereosim {

namespace {

constexpr float kInf = CostVolume::kInf;

struct Margins {
  int x = 0;  // horizontal margin consumed by the per-pixel metric
  int y = 0;
};

Margins metric_margins(CostMetric metric) {
  // Census transform uses a 9x7 neighborhood (4 px horizontal, 3 px
  // vertical) on top of the aggregation block.
  return metric == CostMetric::Census ? Margins{4, 3} : Margins{0, 0};
}

std::vector<std::uint64_t> census_transform(const ImageF& img) {
  const int w = img.width();
  const int h = img.height();
  std::vector<std::uint64_t> codes(static_cast<std::size_t>(w) * h, 0);
  for (int y = 3; y < h - 3; ++y) {
    for (int x = 4; x < w - 4; ++x) {
      const float center = img.at(x, y);
      std::uint64_t code = 0;
      for (int dy = -3; dy <= 3; ++dy) {
        for (int dx = -4; dx <= 4; ++dx) {
          if (dx == 0 && dy == 0) continue;
          code = (code << 1) | (img.at(x + dx, y + dy) < center ? 1u : 0u);
        }
      }
      codes[static_cast<std::size_t>(y) * w + x] = code;
    }
  }
  return codes;
}

}  // namespace

CostVolume compute_cost_volume(const ImageF& left, const ImageF& right,
                               const MatcherConfig& cfg) {
  if (left.width() != right.width() || left.height() != right.height()) {
    throw SizeMismatch("compute_cost_volume: image sizes differ");
  }
  const int w = left.width();
  const int h = left.height();
  const int r = cfg.block_radius;
  const int dmax = cfg.max_disparity;
  const Margins m = metric_margins(cfg.metric);

  CostVolume volume(w, h, dmax, r, cfg.metric);

  std::vector<std::uint64_t> census_left, census_right;
  if (cfg.metric == CostMetric::Census) {
    census_left = census_transform(left);
    census_right = census_transform(right);
  }

  // Per-disparity absolute-difference plane, box-filtered in two passes.
  std::vector<float> plane(static_cast<std::size_t>(w) * h, 0.0f);
  std::vector<float> vsum(static_cast<std::size_t>(w) * h, 0.0f);

  for (int d = 0; d <= dmax; ++d) {
    const int x_data_lo = m.x + d;  // first x with a defined metric value
    const int x_data_hi = w - m.x;  // one past the last
    if (x_data_lo >= x_data_hi) break;

    for (int y = m.y; y < h - m.y; ++y) {
      float* row = plane.data() + static_cast<std::size_t>(y) * w;
      if (cfg.metric == CostMetric::SAD) {
        for (int x = x_data_lo; x < x_data_hi; ++x) {
          row[x] = std::abs(left.at(x, y) - right.at(x - d, y));
        }
      } else {
        const std::uint64_t* cl =
            census_left.data() + static_cast<std::size_t>(y) * w;
        const std::uint64_t* cr =
            census_right.data() + static_cast<std::size_t>(y) * w;
        for (int x = x_data_lo; x < x_data_hi; ++x) {
          row[x] = static_cast<float>(std::popcount(cl[x] ^ cr[x - d]));
        }
      }
    }

    // Valid aggregation region: the whole (2r+1)^2 block, for both views,
    // stays inside the defined metric region.
    const int y_lo = m.y + r;
    const int y_hi = h - m.y - r;  // exclusive
    const int x_lo = x_data_lo + r;
    const int x_hi = x_data_hi - r;
    if (y_lo >= y_hi || x_lo >= x_hi) continue;

    // Vertical sliding sum.
    for (int x = x_data_lo; x < x_data_hi; ++x) {
      float acc = 0.0f;
      for (int y = m.y; y < m.y + 2 * r + 1; ++y) {
        acc += plane[static_cast<std::size_t>(y) * w + x];
      }
      vsum[static_cast<std::size_t>(y_lo) * w + x] = acc;
      for (int y = y_lo + 1; y < y_hi; ++y) {
        acc += plane[static_cast<std::size_t>(y + r) * w + x];
        acc -= plane[static_cast<std::size_t>(y - r - 1) * w + x];
        vsum[static_cast<std::size_t>(y) * w + x] = acc;
      }
    }

    // Horizontal sliding sum, writing final costs.
    for (int y = y_lo; y < y_hi; ++y) {
      const float* vrow = vsum.data() + static_cast<std::size_t>(y) * w;
      float acc = 0.0f;
      for (int x = x_data_lo; x < x_data_lo + 2 * r + 1; ++x) acc += vrow[x];
      volume.at(x_lo, y, d) = acc;
      for (int x = x_lo + 1; x < x_hi; ++x) {
        acc += vrow[x + r];
        acc -= vrow[x - r - 1];
        volume.at(x, y, d) = acc;
      }
    }
  }
  return volume;
}

namespace {

DisparityMap wta_impl(const CostVolume& volume, bool right_view) {
  const int w = volume.width();
  const int h = volume.height();
  const int dmax = volume.max_disparity();
  DisparityMap disp(w, h);

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int best_d = -1;
      float best = kInf;
      for (int d = 0; d <= dmax; ++d) {
        const float c = right_view ? volume.right_at(x, y, d)
                                   : volume.at(x, y, d);
        if (c < best) {
          best = c;
          best_d = d;
        }
      }
      if (best_d < 0 || !std::isfinite(best)) continue;

      float offset = 0.0f;
      if (best_d > 0 && best_d < dmax) {
        const float cm = right_view ? volume.right_at(x, y, best_d - 1)
                                    : volume.at(x, y, best_d - 1);
        const float cp = right_view ? volume.right_at(x, y, best_d + 1)
                                    : volume.at(x, y, best_d + 1);
        if (std::isfinite(cm) && std::isfinite(cp)) {
          const float denom = cm + cp - 2.0f * best;
          if (denom > 0.0f) {
            offset = std::clamp((cm - cp) / (2.0f * denom), -0.5f, 0.5f);
          }
        }
      }
      disp.values.at(x, y) = static_cast<float>(best_d) + offset;
      disp.valid.at(x, y) = 1;
    }
  }
  return disp;
}

}  // namespace

DisparityMap wta_subpixel(const CostVolume& volume, const MatcherConfig&) {
  return wta_impl(volume, false);
}

DisparityMap wta_subpixel_right(const CostVolume& volume,
                                const MatcherConfig&) {
  return wta_impl(volume, true);
}

DisparityMap lr_consistency(const DisparityMap& disp_left,
                            const DisparityMap& disp_right, double threshold) {
  if (disp_left.width() != disp_right.width() ||
      disp_left.height() != disp_right.height()) {
    throw SizeMismatch("lr_consistency: map sizes differ");
  }
  if (std::isinf(threshold)) return disp_left;

  DisparityMap out = disp_left;
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      if (!out.valid.at(x, y)) continue;
      const float dl = out.values.at(x, y);
      const int xr = x - static_cast<int>(std::lround(dl));
      bool keep = false;
      if (xr >= 0 && xr < out.width() && disp_right.valid.at(xr, y)) {
        keep = std::abs(dl - disp_right.values.at(xr, y)) <= threshold;
      }
      if (!keep) {
        out.values.at(x, y) = 0.0f;
        out.valid.at(x, y) = 0;
      }
    }
  }
  return out;
}

DisparityMap uniqueness_filter(const CostVolume& volume,
                               const DisparityMap& disp,
                               const MatcherConfig& cfg) {
  DisparityMap out = disp;
  const int dmax = volume.max_disparity();
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      if (!out.valid.at(x, y)) continue;

      int best_d = -1;
      float best = kInf;
      for (int d = 0; d <= dmax; ++d) {
        const float c = volume.at(x, y, d);
        if (c < best) {
          best = c;
          best_d = d;
        }
      }
      bool keep = best_d >= 0 && std::isfinite(best);
      if (keep) {
        float best_out = kInf;
        for (int d = 0; d <= dmax; ++d) {
          if (d >= best_d - 1 && d <= best_d + 1) continue;
          best_out = std::min(best_out, volume.at(x, y, d));
        }
        const float eps = 1e-6f * std::max(1.0f, best);
        // Degenerate sub-pixel fit (flat parabola) is ambiguous as well.
        if (best_d > 0 && best_d < dmax) {
          const float cm = volume.at(x, y, best_d - 1);
          const float cp = volume.at(x, y, best_d + 1);
          if (std::isfinite(cm) && std::isfinite(cp) &&
              cm + cp - 2.0f * best <= eps) {
            keep = false;
          }
        }
        if (std::isfinite(best_out)) {
          if (best_out - best <= eps) keep = false;  // flat landscape
          if (best > (1.0 - cfg.uniqueness_margin) * best_out) keep = false;
        }
      }
      if (!keep) {
        out.values.at(x, y) = 0.0f;
        out.valid.at(x, y) = 0;
      }
    }
  }
  return out;
}

DisparityMap median_filter(const DisparityMap& disp, int kernel) {
  if (kernel < 3 || kernel % 2 == 0) {
    throw BadKernel("median_filter: kernel must be odd and >= 3");
  }
  const int r = kernel / 2;
  const int w = disp.width();
  const int h = disp.height();
  DisparityMap out(w, h);
  std::vector<float> window;
  window.reserve(static_cast<std::size_t>(kernel) * kernel);

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!disp.valid.at(x, y)) continue;
      window.clear();
      for (int dy = -r; dy <= r; ++dy) {
        const int yy = y + dy;
        if (yy < 0 || yy >= h) continue;
        for (int dx = -r; dx <= r; ++dx) {
          const int xx = x + dx;
          if (xx < 0 || xx >= w) continue;
          if (disp.valid.at(xx, yy)) window.push_back(disp.values.at(xx, yy));
        }
      }
      if (window.size() < 3) continue;
      std::sort(window.begin(), window.end());
      const std::size_t n = window.size();
      const float median = (n % 2 == 1)
                               ? window[n / 2]
                               : 0.5f * (window[n / 2 - 1] + window[n / 2]);
      out.values.at(x, y) = median;
      out.valid.at(x, y) = 1;
    }
  }
  return out;
}

DepthMap disparity_map_to_depth(const DisparityMap& disp, const StereoRig& rig,
                                const MatcherConfig& cfg) {
  DepthMap depth(disp.width(), disp.height());
  for (int y = 0; y < disp.height(); ++y) {
    for (int x = 0; x < disp.width(); ++x) {
      if (!disp.valid.at(x, y)) continue;
      const double z =
          disparity_to_depth(disp.values.at(x, y), rig.intrinsics.fx,
                             rig.baseline, cfg.min_disparity);
      depth.set(x, y, static_cast<float>(z));
    }
  }
  return depth;
}

DepthMap simulate_depth(const ImageF& ir_left, const ImageF& ir_right,
                        const StereoRig& rig, const MatcherConfig& cfg) {
  const CostVolume volume = compute_cost_volume(ir_left, ir_right, cfg);
  DisparityMap disp = wta_subpixel(volume, cfg);
  const DisparityMap disp_right = wta_subpixel_right(volume, cfg);
  disp = lr_consistency(disp, disp_right, cfg.lr_threshold);
  disp = uniqueness_filter(volume, disp, cfg);
  disp = median_filter(disp, cfg.median_kernel);
  return disparity_map_to_depth(disp, rig, cfg);
}

}  // namespace stereosim
