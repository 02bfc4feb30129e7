#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace nnc {

// Splittable counter-seeded generator (splitmix64 core).  Substreams are
// derived by hashing (seed, stream), so Monte Carlo trial i can be handed
// stream i and produce the same draws no matter which thread runs it.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix(mix(seed + 0x632be59bd9b4e019ULL) ^
                   mix(stream + 0x9e3779b97f4a7c15ULL))) {}

  // Independent substream; does not advance this generator.
  Rng split(std::uint64_t stream) const { return Rng(state_, stream); }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on (0, 1]; never returns 0 so log() is safe.
  double uniform() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() <= p; }

  // Standard normal via Box-Muller.
  double gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  // Circularly symmetric complex Gaussian, unit variance: one Box-Muller
  // pair gives two independent real components of variance 1/2 each.
  std::complex<double> complex_gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(a), r * std::sin(a)};
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace nnc
