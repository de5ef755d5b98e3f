#pragma once

#include <cmath>
#include <cstdint>

namespace entsep {

// Splittable deterministic RNG. The generator is splitmix64; child streams are
// derived by hashing (state, stream_id), so a single seed reproduces the same
// sample sequence regardless of how work is distributed across threads.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of mantissa.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller. No caching: each call consumes two
  // uniforms, which keeps the stream position a pure function of call count.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Independent child stream; deterministic in (parent state, stream_id).
  RngStream split(std::uint64_t stream_id) const {
    std::uint64_t z = state_ ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return RngStream(z ^ (z >> 31));
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace entsep
