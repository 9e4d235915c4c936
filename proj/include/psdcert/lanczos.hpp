// Copyright (c) the psdcert developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "psdcert/operator.hpp"
#include "psdcert/ritz.hpp"
#include "psdcert/types.hpp"

namespace psdcert {

enum class ReorthStrategy { Full };

struct LanczosConfig {
  Index numWanted = 25;
  Index maxBasisSize = 0;  ///< 0 selects min(n, max(2*numWanted + 1, 20))
  double convergenceTol = 1e-12;  ///< per pair: ||r_i|| <= tol * ||A||_2 estimate
  int maxRestarts = 400;
  std::uint64_t seed = 1234;
  ReorthStrategy reorth = ReorthStrategy::Full;
};

/// Snapshot taken at each outer iteration (restart cycle).
struct TraceEntry {
  int iteration = 0;
  Index basisSize = 0;
  Index numConverged = 0;        ///< converged pairs among the leading numWanted
  RitzBlock positivePairs;       ///< positive Ritz pairs among the leading numWanted
  Vector leadingResidualNorms;   ///< residual norms of the leading numWanted pairs
};

struct IterationTrace {
  std::vector<TraceEntry> entries;
  bool converged = false;
  long matvecs = 0;
};

struct LanczosResult {
  RitzBlock pairs;  ///< the numWanted algebraically largest Ritz pairs (Mixed side)
  IterationTrace trace;
  bool converged = false;
};

/**
 * Lanczos with full reorthogonalization and thick restarts, targeting the
 * algebraically largest eigenvalues. Ritz pairs are extracted by a dense
 * Rayleigh-Ritz solve of Q^T A Q at every restart, so rayleighExact holds
 * for the returned block.
 *
 * After the wanted pairs first converge, one extra cycle is run from a
 * fresh random continuation vector; convergence is only declared if the
 * leading pairs survive that reinjection. This is what catches multiple
 * eigenvalues whose second copy a single Krylov chain cannot see.
 *
 * Non-convergence within maxRestarts is not an error: the best available
 * block is returned with `converged == false` and the caller decides.
 */
LanczosResult lanczosLargest(const SymmetricOperator& a,
                             const LanczosConfig& cfg,
                             const Tolerances& tol = defaultTolerances());

/// Rayleigh-Ritz extraction on an explicit orthonormal basis q: dense
/// eigendecomposition of q^T A q, returning rotated basis, Ritz values
/// (descending) and recomputed residual columns.
RitzBlock rayleighRitz(const SymmetricOperator& a, const Matrix& q,
                       const Tolerances& tol = defaultTolerances());

/// Sub-block with only the strictly positive (side Positive) or only the
/// nonpositive (side Negative) values, order preserved, side tag set.
RitzBlock splitBySign(const RitzBlock& rb, Side side);

}  // namespace psdcert
