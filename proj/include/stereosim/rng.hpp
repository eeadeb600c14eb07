#pragma once

#include <cmath>
#include <cstdint>

namespace stereosim {

// splitmix64 step. Used both as a mixing hash and as the generator behind
// RngStream so that sampled values are identical on every platform
// (std::mt19937_64 is portable but the standard distributions are not).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a;
  std::uint64_t h = splitmix64(s);
  s = h ^ b;
  return splitmix64(s);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b,
                                  std::uint64_t c) {
  return hash_combine(hash_combine(a, b), c);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b,
                                  std::uint64_t c, std::uint64_t d) {
  return hash_combine(hash_combine(a, b, c), d);
}

// Deterministic random stream. Cheap to construct, so per-pixel and
// per-frame streams are made on the fly from hashed seeds.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {
    // One warm-up step decorrelates adjacent integer seeds.
    (void)splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0,1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  int uniform_int(int lo, int hi_inclusive) {
    return lo + static_cast<int>(
                    uniform_index(static_cast<std::uint64_t>(hi_inclusive) -
                                  static_cast<std::uint64_t>(lo) + 1));
  }

  // Standard normal via Box-Muller; consumes exactly two draws per call.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace stereosim
