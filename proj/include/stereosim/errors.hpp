#pragma once

#include <stdexcept>
#include <string>

namespace stereosim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPositiveDepth : Error {
  using Error::Error;
};
struct SizeMismatch : Error {
  using Error::Error;
};
struct EmptyPalette : Error {
  using Error::Error;
};
struct PlacementOverflow : Error {
  using Error::Error;
};
struct BadDensity : Error {
  using Error::Error;
};
struct BadKernel : Error {
  using Error::Error;
};
struct DegenerateConfiguration : Error {
  using Error::Error;
};
struct NoConsensus : Error {
  using Error::Error;
};
struct EmptyInput : Error {
  using Error::Error;
};
struct DepthOutOfRange : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct MeshLoadError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace stereosim
