#pragma once

#include <cmath>
#include <cstdint>

namespace pcnet {

// Counter-based pseudo-random stream: draw i is splitmix64 applied to
// seed + i * golden ratio increment. Pure integer pipeline, so a stream is
// a function of (seed, draw index) only and identical across platforms.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in (0, 1); the half-offset keeps log() in Box-Muller finite.
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
  }

  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // Independent substream, e.g. one per sequence of a dataset.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    CounterRng mixer(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
    return mixer.next_u64();
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace pcnet
