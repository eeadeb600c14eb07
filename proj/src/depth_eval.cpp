#include "stereosim/depth_eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stereosim {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

int nearest_index(int dst, int dst_size, int src_size) {
  const double src = (dst + 0.5) * static_cast<double>(src_size) / dst_size;
  return std::clamp(static_cast<int>(src), 0, src_size - 1);
}

double pairwise_range(std::span<const double> t) {
  if (t.size() <= 16) {
    double s = 0.0;
    for (double v : t) s += v;
    return s;
  }
  const std::size_t half = t.size() / 2;
  return pairwise_range(t.first(half)) + pairwise_range(t.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> terms) {
  return pairwise_range(terms);
}

DepthMap resize_for_eval(const DepthMap& map, int target_width,
                         int target_height) {
  if (map.width() == target_width && map.height() == target_height) return map;
  DepthMap out(target_width, target_height);
  for (int y = 0; y < target_height; ++y) {
    const int sy = nearest_index(y, target_height, map.height());
    for (int x = 0; x < target_width; ++x) {
      const int sx = nearest_index(x, target_width, map.width());
      out.set(x, y, map.at(sx, sy));
    }
  }
  return out;
}

EvalMask resize_for_eval(const EvalMask& mask, int target_width,
                         int target_height) {
  if (mask.region.width() == target_width &&
      mask.region.height() == target_height)
    return mask;
  EvalMask out;
  out.scope = mask.scope;
  out.region = Image<std::uint8_t>(target_width, target_height, 1, 0);
  for (int y = 0; y < target_height; ++y) {
    const int sy = nearest_index(y, target_height, mask.region.height());
    for (int x = 0; x < target_width; ++x) {
      const int sx = nearest_index(x, target_width, mask.region.width());
      out.region.at(x, y) = mask.region.at(sx, sy);
    }
  }
  return out;
}

MetricsReport compute_metrics(const DepthMap& pred, const DepthMap& gt,
                              const EvalMask& mask, bool skip_invalid) {
  if (pred.width() != gt.width() || pred.height() != gt.height()) {
    throw SizeMismatch("compute_metrics: pred/gt shapes differ");
  }
  if (!mask.region.empty() && (mask.region.width() != gt.width() ||
                               mask.region.height() != gt.height())) {
    throw SizeMismatch("compute_metrics: mask shape differs");
  }

  std::vector<double> sq_terms, abs_terms, rel_terms;
  std::size_t n = 0, ok105 = 0, ok110 = 0, ok125 = 0;
  for (int y = 0; y < gt.height(); ++y) {
    for (int x = 0; x < gt.width(); ++x) {
      if (!mask.region.empty() && mask.region.at(x, y) == 0) continue;
      if (!gt.valid(x, y)) continue;
      const double g = gt.at(x, y);
      const bool pred_valid = pred.valid(x, y);
      if (!pred_valid && skip_invalid) continue;
      const double p = pred_valid ? pred.at(x, y) : 0.0;
      ++n;
      const double diff = p - g;
      sq_terms.push_back(diff * diff);
      abs_terms.push_back(std::abs(diff));
      rel_terms.push_back(std::abs(diff) / g);
      if (pred_valid) {
        const double ratio = std::max(p / g, g / p);
        ok105 += ratio < 1.05;
        ok110 += ratio < 1.10;
        ok125 += ratio < 1.25;
      }
    }
  }

  MetricsReport report;
  report.n_pixels = n;
  if (n == 0) {
    report.rmse = report.rel = report.mae = kNan;
    report.delta_105 = report.delta_110 = report.delta_125 = kNan;
    return report;
  }
  const double dn = static_cast<double>(n);
  report.rmse = std::sqrt(pairwise_sum(sq_terms) / dn);
  report.mae = pairwise_sum(abs_terms) / dn;
  report.rel = pairwise_sum(rel_terms) / dn;
  report.delta_105 = 100.0 * ok105 / dn;
  report.delta_110 = 100.0 * ok110 / dn;
  report.delta_125 = 100.0 * ok125 / dn;
  return report;
}

DepthMap fuse_confidence(const DepthMap& raw, const DepthMap& pred,
                         const ConfidenceMap& conf) {
  if (raw.width() != pred.width() || raw.height() != pred.height() ||
      raw.width() != conf.values.width() ||
      raw.height() != conf.values.height()) {
    throw SizeMismatch("fuse_confidence: shapes differ");
  }
  DepthMap out(raw.width(), raw.height());
  for (int y = 0; y < raw.height(); ++y) {
    for (int x = 0; x < raw.width(); ++x) {
      const bool rv = raw.valid(x, y);
      const bool pv = pred.valid(x, y);
      if (!rv) {
        out.set(x, y, pred.at(x, y));  // pred may itself be invalid (0)
      } else if (!pv) {
        out.set(x, y, raw.at(x, y));
      } else {
        const float c = conf.values.at(x, y);
        out.set(x, y, c * pred.at(x, y) + (1.0f - c) * raw.at(x, y));
      }
    }
  }
  return out;
}

NormalMap normals_from_depth(const DepthMap& depth, const Intrinsics& k) {
  const int w = depth.width();
  const int h = depth.height();
  NormalMap out;
  out.values = ImageF(w, h, 3, 0.0f);
  out.valid = Image<std::uint8_t>(w, h, 1, 0);

  auto point = [&](int x, int y) {
    return unproject(Vec2(x + 0.5, y + 0.5), depth.at(x, y), k);
  };

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!depth.valid(x, y)) continue;
      if (x == 0 || x + 1 >= w || y == 0 || y + 1 >= h) continue;
      if (!depth.valid(x - 1, y) || !depth.valid(x + 1, y) ||
          !depth.valid(x, y - 1) || !depth.valid(x, y + 1))
        continue;
      const Vec3 dx = point(x + 1, y) - point(x - 1, y);
      const Vec3 dy = point(x, y + 1) - point(x, y - 1);
      Vec3 n = dx.cross(dy);
      const double len = n.norm();
      if (len < 1e-15) continue;
      n /= len;
      if (n.z() > 0.0) n = -n;
      out.values.at(x, y, 0) = static_cast<float>(n.x());
      out.values.at(x, y, 1) = static_cast<float>(n.y());
      out.values.at(x, y, 2) = static_cast<float>(n.z());
      out.valid.at(x, y) = 1;
    }
  }
  return out;
}

GradientMap gradient_map(const DepthMap& depth) {
  const int w = depth.width();
  const int h = depth.height();
  GradientMap out;
  out.values = ImageF(w, h, 2, 0.0f);
  out.valid = Image<std::uint8_t>(w, h, 1, 0);

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!depth.valid(x, y)) continue;
      const bool xm = x > 0 && depth.valid(x - 1, y);
      const bool xp = x + 1 < w && depth.valid(x + 1, y);
      const bool ym = y > 0 && depth.valid(x, y - 1);
      const bool yp = y + 1 < h && depth.valid(x, y + 1);
      if (!(xm || xp) || !(ym || yp)) continue;

      float gx, gy;
      if (xm && xp)
        gx = (depth.at(x + 1, y) - depth.at(x - 1, y)) * 0.5f;
      else if (xp)
        gx = depth.at(x + 1, y) - depth.at(x, y);
      else
        gx = depth.at(x, y) - depth.at(x - 1, y);
      if (ym && yp)
        gy = (depth.at(x, y + 1) - depth.at(x, y - 1)) * 0.5f;
      else if (yp)
        gy = depth.at(x, y + 1) - depth.at(x, y);
      else
        gy = depth.at(x, y) - depth.at(x, y - 1);

      out.values.at(x, y, 0) = gx;
      out.values.at(x, y, 1) = gy;
      out.valid.at(x, y) = 1;
    }
  }
  return out;
}

namespace {

// Weighted L1 means over the pixels where both operands are defined.
LossTerms loss_terms(const DepthMap& pred, const DepthMap& gt,
                     const Image<std::uint8_t>& fg_mask, const Intrinsics& k,
                     const LossWeights& w) {
  const NormalMap pn = normals_from_depth(pred, k);
  const NormalMap gn = normals_from_depth(gt, k);
  const GradientMap pg = gradient_map(pred);
  const GradientMap gg = gradient_map(gt);

  std::vector<double> d_terms, d_wts, n_terms, n_wts, g_terms, g_wts;
  for (int y = 0; y < gt.height(); ++y) {
    for (int x = 0; x < gt.width(); ++x) {
      const double px_w =
          (!fg_mask.empty() && fg_mask.at(x, y) != 0) ? w.fg_boost : 1.0;
      if (pred.valid(x, y) && gt.valid(x, y)) {
        d_terms.push_back(px_w *
                          std::abs(static_cast<double>(pred.at(x, y)) -
                                   static_cast<double>(gt.at(x, y))));
        d_wts.push_back(px_w);
      }
      if (pn.valid.at(x, y) && gn.valid.at(x, y)) {
        double l1 = 0.0;
        for (int c = 0; c < 3; ++c) {
          l1 += std::abs(static_cast<double>(pn.values.at(x, y, c)) -
                         static_cast<double>(gn.values.at(x, y, c)));
        }
        n_terms.push_back(px_w * l1);
        n_wts.push_back(px_w);
      }
      if (pg.valid.at(x, y) && gg.valid.at(x, y)) {
        double l1 = 0.0;
        for (int c = 0; c < 2; ++c) {
          l1 += std::abs(static_cast<double>(pg.values.at(x, y, c)) -
                         static_cast<double>(gg.values.at(x, y, c)));
        }
        g_terms.push_back(px_w * l1);
        g_wts.push_back(px_w);
      }
    }
  }

  auto weighted_mean = [](const std::vector<double>& t,
                          const std::vector<double>& wt) {
    if (t.empty()) return 0.0;
    return pairwise_sum(t) / pairwise_sum(wt);
  };

  LossTerms terms;
  terms.depth = weighted_mean(d_terms, d_wts);
  terms.normal = weighted_mean(n_terms, n_wts);
  terms.gradient = weighted_mean(g_terms, g_wts);
  terms.combined = w.w_n * terms.normal + w.w_d * terms.depth +
                   w.w_g * terms.gradient;
  return terms;
}

}  // namespace

RestorationLoss restoration_loss(const DepthMap& pred_final,
                                 const DepthMap& pred_initial,
                                 const DepthMap& gt,
                                 const Image<std::uint8_t>& fg_mask,
                                 const Intrinsics& k, const LossWeights& w) {
  if (pred_final.width() != gt.width() || pred_final.height() != gt.height() ||
      pred_initial.width() != gt.width() ||
      pred_initial.height() != gt.height()) {
    throw SizeMismatch("restoration_loss: shapes differ");
  }
  if (!fg_mask.empty() &&
      (fg_mask.width() != gt.width() || fg_mask.height() != gt.height())) {
    throw SizeMismatch("restoration_loss: fg_mask shape differs");
  }

  RestorationLoss loss;
  loss.final_terms = loss_terms(pred_final, gt, fg_mask, k, w);
  loss.initial_terms = loss_terms(pred_initial, gt, fg_mask, k, w);
  loss.total = w.w_final * loss.final_terms.combined +
               w.w_initial * loss.initial_terms.combined;
  return loss;
}

}  // namespace stereosim
