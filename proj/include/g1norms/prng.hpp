#ifndef G1NORMS_PRNG_HPP
#define G1NORMS_PRNG_HPP

#include <complex>
#include <cstdint>

namespace g1norms {

// Counter-based generator built on the SplitMix64 output function
// (Steele/Lea/Flood; Vigna's splitmix64.c). The i-th output of the stream
// with key s is mix(s + (i+1) * 0x9E3779B97F4A7C15), identical to the
// reference splitmix64 sequence seeded with s. Streams are split by
// rekeying with derive_key, so any (seed, trial, role) tuple addresses an
// independent stream regardless of scheduling or consumption order.
//
// Reference vectors (key 0): E220A8397B1DCDAF 6E789E6AA1B965F4
//                            06C45D188009454F F88BB8A8724C81EC
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t derive_key(std::uint64_t key, std::uint64_t index) {
  return splitmix64_mix(key + (index + 1) * kGolden);
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return splitmix64_mix(key_ + (++counter_) * kGolden); }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe under log().
  double next_unit_open() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; generates a pair, returns them in turn.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u = next_unit_open();
    const double v = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u));
    const double angle = 2.0 * M_PI * v;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // Standard complex normal, E|z|^2 = 1.
  std::complex<double> next_complex_gaussian() {
    const double re = next_gaussian();
    const double im = next_gaussian();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
  }

  // Uniform on the closed disk of the given radius, by rejection from the
  // bounding square.
  std::complex<double> next_in_disk(double radius) {
    for (;;) {
      const double x = (2.0 * next_unit() - 1.0) * radius;
      const double y = (2.0 * next_unit() - 1.0) * radius;
      if (x * x + y * y <= radius * radius) return {x, y};
    }
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace g1norms

#endif  // G1NORMS_PRNG_HPP
