#ifndef SPREADNET_RNG_HPP_
#define SPREADNET_RNG_HPP_

#include <cstdint>
#include <random>

namespace spreadnet {

/// SplitMix64 finalizer. Used to turn arbitrary integers into well-mixed
/// 64-bit seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives the seed of substream `index` from a master seed. Substreams are
/// independent of each other and of execution order, so replications can be
/// dispatched in any order and still reproduce bit-identically.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master ^ mix64(index));
}

/// mt19937_64 with explicit output conversions. std::uniform_*_distribution
/// is implementation-defined, so drawing through those would break
/// reproducibility across standard libraries; these conversions do not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// True with probability p. p <= 0 never fires, p >= 1 always fires.
  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [0, n), n > 0, by rejection sampling.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace spreadnet

#endif  // SPREADNET_RNG_HPP_
