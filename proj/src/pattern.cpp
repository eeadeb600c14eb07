#include "stereosim/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stereosim/rng.hpp"

namespace stereosim {

PatternImage generate_pattern(std::uint64_t seed, int width, int height,
                              double density, double fov_deg) {
  if (!(density > 0.0 && density < 1.0)) {
    throw BadDensity("generate_pattern: density must be in (0,1)");
  }
  if (width <= 0 || height <= 0) {
    throw BadDensity("generate_pattern: non-positive pattern size");
  }

  PatternImage pattern;
  pattern.width = width;
  pattern.height = height;
  pattern.fov_deg = fov_deg;
  const std::size_t n = static_cast<std::size_t>(width) * height;
  pattern.bits.assign(n, 0);

  std::size_t lit = static_cast<std::size_t>(
      std::llround(density * static_cast<double>(n)));
  lit = std::clamp<std::size_t>(lit, 1, n - 1);

  // Partial Fisher-Yates: the first `lit` slots of a virtual shuffle.
  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0u);
  RngStream rng(hash_combine(seed, 0x5041545445524e31ull));
  for (std::size_t i = 0; i < lit; ++i) {
    const std::size_t j = i + rng.uniform_index(n - i);
    std::swap(idx[i], idx[j]);
    pattern.bits[idx[i]] = 1;
  }
  return pattern;
}

}  // namespace stereosim
