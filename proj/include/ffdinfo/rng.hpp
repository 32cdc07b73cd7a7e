#pragma once

#include <cstdint>

namespace ffdinfo {

// SplitMix64 (Steele, Lea & Flood 2014): a counter-based 64-bit generator.
// The state advances by a fixed odd constant and the output is a finalizer
// of the state, so any stream position is a pure function of
// (initial state, step index). Streams for parallel tasks are derived by
// double-mixing the master seed with the task index, which keeps draws
// bitwise reproducible under any thread layout.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static RngStream for_task(std::uint64_t master_seed, std::uint64_t task) {
    return RngStream(mix(master_seed ^ mix(task + 0x632be59bd9b4e019ULL)));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  std::uint64_t state_;
};

}  // namespace ffdinfo
