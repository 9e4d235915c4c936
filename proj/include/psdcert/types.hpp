// Copyright (c) the psdcert developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace psdcert {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class Side { Positive, Negative, Mixed };

/// One record for every numerical tolerance used across the library.
/// Defaults are an order of magnitude above double-precision accumulation
/// at n <= 1e4; override per call where needed.
struct Tolerances {
  double symTol = 1e-12;        ///< relative symmetry check at construction
  double orthTol = 1e-10;       ///< ||V^T V - I||_F threshold for orthonormal bases
  double eigTol = 1e-11;        ///< eigensolver residual, relative to ||A||_F
  double recomputeTol = 1e-10;  ///< residual recomputation agreement, relative
  double psdTol = 1e-12;        ///< eigenvalue floor for PSD checks, relative to ||A||_2
  double boundSlack = 1e-8;     ///< slack factor (times ||A||_F) in bound-validity checks
  Index denseThreshold = 600;   ///< below this dimension, exact dense paths are used
  double breakdownFactor = 1e-14;  ///< Lanczos breakdown threshold, times ||A||_2 estimate
  int powerIterations = 20;     ///< iterations for the norm estimate of implicit operators
};

inline const Tolerances& defaultTolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace psdcert
