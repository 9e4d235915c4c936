// Copyright (c) the psdcert developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "psdcert/types.hpp"

namespace psdcert {

/// Seeded random source with fixed draw algorithms (Box-Muller for normals,
/// 53-bit uniforms), so that a given seed reproduces the same sequence on
/// every platform. All randomness in the library flows through this class.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in (lo, hi); the endpoints occur with probability zero.
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  double gaussian() {
    if (haveSpare_) {
      haveSpare_ = false;
      return spare_;
    }
    // Box-Muller; u1 in (0,1] so the log is finite.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    haveSpare_ = true;
    return r * std::cos(t);
  }

  Vector gaussianVector(Index n) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = gaussian();
    return v;
  }

  Matrix gaussianMatrix(Index rows, Index cols) {
    Matrix m(rows, cols);
    for (Index c = 0; c < cols; ++c)
      for (Index r = 0; r < rows; ++r) m(r, c) = gaussian();
    return m;
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool haveSpare_ = false;
  double spare_ = 0.0;
};

}  // namespace psdcert
