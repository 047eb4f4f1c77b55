#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace locomani {

/// Derives decorrelated stream seeds from (base, stream, index) via splitmix64
/// finalizers. Every random decision in the project flows through this so a
/// single master seed pins the whole experiment.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                                 std::uint64_t index = 0) {
  return mix_seed(base ^ mix_seed(stream ^ mix_seed(index)));
}

/// Deterministic RNG. std::mt19937_64 has a standard-mandated bit-exact
/// output sequence; the distribution transforms are written out here because
/// std::uniform_real_distribution and friends are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(uniform() * (static_cast<double>(hi - lo) + 1.0));
  }

  /// Standard normal via Box-Muller. The trig form consumes exactly two
  /// uniforms per pair, keeping the stream alignment data-independent.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace locomani
