#pragma once

#include <cstdint>
#include <vector>

#include "stereosim/errors.hpp"

namespace stereosim {

// Dense row-major interleaved image. Kept intentionally minimal; everything
// that touches pixels indexes in (x, y, channel) with y increasing downward.
template <typename T>
class Image {
 public:
  Image() = default;
  Image(int width, int height, int channels = 1, T fill = T{})
      : width_(width),
        height_(height),
        channels_(channels),
        data_(static_cast<std::size_t>(width) * height * channels, fill) {}

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }
  bool empty() const { return data_.empty(); }
  std::size_t size() const { return data_.size(); }

  T& at(int x, int y, int c = 0) { return data_[index(x, y, c)]; }
  const T& at(int x, int y, int c = 0) const { return data_[index(x, y, c)]; }

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }

  bool same_shape(const Image& other) const {
    return width_ == other.width_ && height_ == other.height_ &&
           channels_ == other.channels_;
  }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  bool operator==(const Image& other) const {
    return width_ == other.width_ && height_ == other.height_ &&
           channels_ == other.channels_ && data_ == other.data_;
  }

 private:
  std::size_t index(int x, int y, int c) const {
    return (static_cast<std::size_t>(y) * width_ + x) * channels_ + c;
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 1;
  std::vector<T> data_;
};

using ImageF = Image<float>;
using ImageU8 = Image<std::uint8_t>;
using ImageU16 = Image<std::uint16_t>;
using ImageI32 = Image<std::int32_t>;

// Depth map in meters. Value 0 encodes "invalid" throughout the pipeline
// (missing measurement, background at infinity); valid values are positive.
struct DepthMap {
  ImageF values;

  DepthMap() = default;
  DepthMap(int width, int height) : values(width, height, 1, 0.0f) {}
  explicit DepthMap(ImageF v) : values(std::move(v)) {}

  int width() const { return values.width(); }
  int height() const { return values.height(); }
  bool valid(int x, int y) const { return values.at(x, y) > 0.0f; }
  float at(int x, int y) const { return values.at(x, y); }
  void set(int x, int y, float meters) { values.at(x, y) = meters; }
  void invalidate(int x, int y) { values.at(x, y) = 0.0f; }

  std::size_t valid_count() const {
    std::size_t n = 0;
    for (int y = 0; y < height(); ++y)
      for (int x = 0; x < width(); ++x)
        if (valid(x, y)) ++n;
    return n;
  }
};

}  // namespace stereosim
