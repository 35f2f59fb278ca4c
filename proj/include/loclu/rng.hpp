#pragma once

#include <cmath>
#include <cstdint>

namespace loclu {

// SplitMix64 generator. Cheap to seed, so every logical consumer (a bootstrap
// replicate, a vertex row, an attribute column) gets its own stream derived
// from (seed, tag, index). That keeps results identical no matter how work is
// scheduled across threads.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // Uniform in [0, n) without modulo bias.
  std::uint64_t next_index(std::uint64_t n) {
    const std::uint64_t limit = n * (0xffffffffffffffffull / n);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // Standard normal via Marsaglia's polar method; the spare is cached so the
  // stream stays deterministic per generator instance.
  double next_normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * next_unit() - 1.0;
      v = 2.0 * next_unit() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

namespace detail {
inline std::uint64_t scramble(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

// Stream id for (seed, tag, index); all three are fully mixed.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index = 0) {
  std::uint64_t h = detail::scramble(seed + 0x9e3779b97f4a7c15ull * (tag + 1));
  h = detail::scramble(h + 0x94d049bb133111ebull * (index + 1));
  return h;
}

}  // namespace loclu
