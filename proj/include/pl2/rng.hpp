#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "pl2/specfun.hpp"

namespace pl2 {

// Seeded generator with uniforms derived directly from the engine's bits, so
// reports are reproducible byte-for-byte across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // [0, 1)
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform over the closed disc of the given radius.
  Cplx complex_in_disc(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double theta = 2.0 * std::numbers::pi * uniform();
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  Cplx complex_in_box(double half_width) {
    return {uniform(-half_width, half_width), uniform(-half_width, half_width)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pl2
