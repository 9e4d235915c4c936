// Copyright (c) the psdcert developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "psdcert/lanczos.hpp"
#include "psdcert/operator.hpp"
#include "psdcert/ritz.hpp"
#include "psdcert/types.hpp"

namespace psdcert {

enum class DPlusTag { ExactOracle, IterativeEstimate, AssumedZero };

/// The deflated operator x -> P A P x with P = I - V V^T, which probes the
/// spectrum of the complement of range(V) without forming a complement basis.
SymmetricOperator deflatedOperator(const SymmetricOperator& a,
                                   const RitzBlock& rb);

struct DeflatedLambdaMax {
  double value = 0.0;      ///< Ritz estimate plus residual slack
  double slack = 0.0;      ///< residual norm of the leading deflated pair
  bool converged = true;   ///< inner solve reached its tolerance
};

/// Estimate of lambda_max over the complement of rb's basis, computed by
/// Lanczos on the deflated operator. Ritz vectors with a visible component
/// in range(V) are excluded; the leading surviving Ritz value is returned
/// with its residual norm added, making it an upper estimate up to the
/// inner tolerance. If rb spans the whole space the value is -infinity.
DeflatedLambdaMax estimateDeflatedLambdaMax(
    const SymmetricOperator& a, const RitzBlock& rb,
    const LanczosConfig& innerCfg, const Tolerances& tol = defaultTolerances());

enum class DPlusMode {
  Auto,       ///< exact dense path below denseThreshold, iterative above
  Oracle,     ///< dense eigendecomposition of the complement block
  Iterative,  ///< deflated Lanczos sweep over the positive complement values
  AssumeZero  ///< verify the complement is negative semidefinite, else fall
              ///< back to the iterative path
};

struct DPlusEstimate {
  double frob = 0.0;       ///< estimate of ||proj_+(Vperp^T A Vperp)||_F
  double lambdaMax = 0.0;  ///< estimate of lambda_max(Vperp^T A Vperp)
  DPlusTag tag = DPlusTag::ExactOracle;
  bool conservative = true;  ///< false if an inner solve did not converge
};

/// Frobenius norm of the positive part of the complement block, which is the
/// correction term of every certificate. The dense path forms the complement
/// explicitly; the iterative path extracts positive deflated Ritz values
/// until a nonpositive one appears, adding per-pair residual slack.
DPlusEstimate estimateDPlusFrob(const SymmetricOperator& a, const RitzBlock& rb,
                                const LanczosConfig& innerCfg,
                                DPlusMode mode = DPlusMode::Auto,
                                const Tolerances& tol = defaultTolerances());

}  // namespace psdcert
