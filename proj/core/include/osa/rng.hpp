#ifndef OSA_RNG_HPP
#define OSA_RNG_HPP

#include <cmath>
#include <cstdint>

namespace osa {

/// Seeded 64-bit PRNG used for every random draw in the simulator.
///
/// The generator is splitmix64: the state advances by a fixed odd increment
/// and each output is a bijective finalizer hash of the state, so the i-th
/// output is a pure function of (seed, i). Identical seeds produce identical
/// draw sequences on every platform; no libc or libstdc++ distribution code
/// is involved anywhere.
///
/// Uniform doubles take the top 53 bits of an output, giving values in [0,1).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Bernoulli(p); consumes one draw.
  bool next_bernoulli(double p) { return next_unit() < p; }

  /// Uniform double in [lower, lower + width); consumes one draw.
  double next_uniform(double lower, double width) { return lower + width * next_unit(); }

  /// Standard normal via Box-Muller; consumes exactly two draws.
  double next_normal() {
    const double u1 = 1.0 - next_unit();  // (0, 1]
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Deterministic derivation of an independent stream seed. Used to give
  /// every (frame, purpose) pair its own stream so that the realized sample
  /// path does not depend on how many draws earlier frames consumed.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Gamma(shape, 1) via Marsaglia-Tsang squeeze/rejection (shape >= 1 uses the
/// method directly; shape < 1 uses the boost trick gamma(a) = gamma(a+1)*U^(1/a)).
double sample_gamma(RngStream& rng, double shape);

/// Beta(a, b) as Ga/(Ga+Gb). Parameters must be positive.
double sample_beta(RngStream& rng, double a, double b);

inline double sample_gamma(RngStream& rng, double shape) {
  if (shape < 1.0) {
    const double u = 1.0 - rng.next_unit();
    return sample_gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = rng.next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_unit();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

inline double sample_beta(RngStream& rng, double a, double b) {
  const double ga = sample_gamma(rng, a);
  const double gb = sample_gamma(rng, b);
  const double s = ga + gb;
  return s > 0.0 ? ga / s : 0.5;
}

}  // namespace osa

#endif  // OSA_RNG_HPP
