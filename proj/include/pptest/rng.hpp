#pragma once

#include <cmath>
#include <cstdint>

namespace pptest {

// Counter-based random streams in the SplitMix64 family (Steele/Lea/Flood,
// "Fast splittable pseudorandom number generators", OOPSLA 2014).  The k-th
// output of a stream is a pure function of (key, k), so any draw can be
// reproduced without replaying the stream and child streams can be derived
// for (seed, path, replicate, ...) hierarchies independently of scheduling.

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Deterministic child key. The tag namespaces unrelated uses of the same
// parent seed (paths vs. replicates vs. threshold draws).
inline std::uint64_t derive_key(std::uint64_t key, std::uint64_t tag,
                                std::uint64_t index) {
  std::uint64_t h = mix64(key + kGoldenGamma * (tag + 1));
  return mix64(h ^ (index + 0x632BE59BD9B4E019ULL));
}

namespace stream_tag {
constexpr std::uint64_t path = 1;       // sample_experiment -> per-path stream
constexpr std::uint64_t replicate = 2;  // estimate_power -> per-replicate seed
constexpr std::uint64_t grid_point = 3; // power_curve -> per-u-point seed
constexpr std::uint64_t threshold = 4;  // default Bayes threshold calibration
constexpr std::uint64_t mc_draws = 5;   // threshold / limit-power normal draws
} // namespace stream_tag

double norm_quantile(double p); // normal.hpp/cpp

class RngStream {
public:
  explicit RngStream(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGoldenGamma); }

  // Uniform on [0, 1) with 53 random bits.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Exponential inter-arrival time; next_uniform() < 1 keeps the log finite.
  double next_exponential(double rate) {
    return -std::log1p(-next_uniform()) / rate;
  }

  // Standard normal by inversion; one uniform per draw, which keeps the
  // mapping (key, counter) -> value free of rejection-state.
  double next_normal() {
    double u;
    do {
      u = next_uniform();
    } while (u == 0.0);
    return norm_quantile(u);
  }

  RngStream child(std::uint64_t tag, std::uint64_t index) const {
    return RngStream(derive_key(key_, tag, index));
  }

  std::uint64_t key() const { return key_; }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

} // namespace pptest
