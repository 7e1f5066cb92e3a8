// rng.hpp
// Deterministic seeded RNG. Identical (seed, stream) pairs produce
// identical draw sequences on every platform, so all samplers are
// hand-rolled on top of mt19937_64 (the standard distributions are
// implementation-defined and would break byte-identical CSV output).

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace ptomo {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  // Fresh generator for an independent sub-experiment (per-trial splitting).
  SeededRng derive(std::uint64_t stream) const { return SeededRng(seed_, stream); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t raw() { return engine_(); }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = raw();
    } while (x >= limit);
    return x % n;
  }

  // Standard normal via Box-Muller.
  double normal();

  // Complex standard normal: real and imaginary parts ~ N(0, 1/2),
  // so E|z|^2 = 1.
  std::complex<double> complex_normal() {
    const double s = 0.7071067811865476;  // 1/sqrt(2)
    double re = normal(), im = normal();
    return {s * re, s * im};
  }

  // Gamma(shape, 1) for shape >= 1 (Marsaglia-Tsang).
  double gamma(double shape);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ptomo
