#pragma once

#include <cstdint>
#include <vector>

#include "stereosim/errors.hpp"

namespace stereosim {

// Binary projector dot pattern. Dots are 1, background 0.
struct PatternImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;
  double fov_deg = 90.0;  // projector field of view across the width

  bool at(int x, int y) const {
    return bits[static_cast<std::size_t>(y) * width + x] != 0;
  }
  std::size_t lit_count() const {
    std::size_t n = 0;
    for (auto b : bits) n += b != 0;
    return n;
  }
  double density() const {
    return bits.empty() ? 0.0
                        : static_cast<double>(lit_count()) /
                              static_cast<double>(bits.size());
  }
};

// Pseudo-random dot grid with an exact lit-pixel count (round(density *
// pixels), clamped so at least one pixel is lit and one unlit).
PatternImage generate_pattern(std::uint64_t seed, int width, int height,
                              double density, double fov_deg = 90.0);

}  // namespace stereosim
