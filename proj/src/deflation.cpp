// Copyright (c) the psdcert developers.
// SPDX-License-Identifier: Apache-2.0
#include "psdcert/deflation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "psdcert/dense_eig.hpp"
#include "psdcert/norms.hpp"

namespace psdcert {

namespace {

// Ritz pairs of the deflated operator whose vectors live in the complement;
// anything with a visible range(V) component is a deflation artifact.
std::vector<Index> complementColumns(const RitzBlock& deflatedPairs,
                                     const Matrix& basis,
                                     const Tolerances& tol) {
  std::vector<Index> cols;
  if (basis.cols() == 0) {
    for (Index i = 0; i < deflatedPairs.count(); ++i) cols.push_back(i);
    return cols;
  }
  for (Index i = 0; i < deflatedPairs.count(); ++i) {
    const double overlap = (basis.transpose() * deflatedPairs.basis.col(i)).norm();
    if (overlap <= std::max(tol.orthTol, 1e-12)) cols.push_back(i);
  }
  return cols;
}

DPlusEstimate dPlusDense(const SymmetricOperator& a, const RitzBlock& rb,
                         std::uint64_t seed, const Tolerances& tol) {
  const Matrix vperp = orthonormalComplement(rb.basis, seed, tol);
  DPlusEstimate out;
  out.tag = DPlusTag::ExactOracle;
  out.conservative = true;
  if (vperp.cols() == 0) {
    out.frob = 0.0;
    out.lambdaMax = -std::numeric_limits<double>::infinity();
    return out;
  }
  Matrix block = vperp.transpose() * a.apply(vperp);
  block = 0.5 * (block + block.transpose());
  const Vector vals = symEigValues(block);
  out.lambdaMax = vals[0];
  double sq = 0.0;
  for (Index i = 0; i < vals.size(); ++i)
    if (vals[i] > 0.0) sq += vals[i] * vals[i];
  out.frob = std::sqrt(sq);
  return out;
}

}  // namespace

SymmetricOperator deflatedOperator(const SymmetricOperator& a,
                                   const RitzBlock& rb) {
  const Matrix basis = rb.basis;
  const SymmetricOperator inner = a;
  auto matvec = [basis, inner](const Vector& x) {
    Vector px = x - basis * (basis.transpose() * x);
    Vector apx = inner.apply(px);
    return Vector(apx - basis * (basis.transpose() * apx));
  };
  // ||P A P||_2 <= ||A||_2, so the outer estimate stays valid.
  return SymmetricOperator::fromMatvec(a.dim(), matvec, a.norm2Estimate());
}

DeflatedLambdaMax estimateDeflatedLambdaMax(const SymmetricOperator& a,
                                            const RitzBlock& rb,
                                            const LanczosConfig& innerCfg,
                                            const Tolerances& tol) {
  DeflatedLambdaMax out;
  const Index n = a.dim();
  const Index k = rb.count();
  if (k >= n) {
    out.value = -std::numeric_limits<double>::infinity();
    out.slack = 0.0;
    out.converged = true;
    return out;
  }

  LanczosConfig cfg = innerCfg;
  cfg.numWanted = std::min<Index>(std::max<Index>(cfg.numWanted, 1), n - k);
  cfg.maxBasisSize = 0;

  const SymmetricOperator deflated = deflatedOperator(a, rb);
  const LanczosResult res = lanczosLargest(deflated, cfg, tol);
  const std::vector<Index> cols = complementColumns(res.pairs, rb.basis, tol);

  if (cols.empty()) {
    // Nothing usable survived the filter; report the raw leading value and
    // flag the estimate as unreliable.
    out.value = res.pairs.values.size() > 0
                    ? res.pairs.values[0] + res.pairs.residualNorms[0]
                    : 0.0;
    out.slack = res.pairs.residualNorms.size() > 0 ? res.pairs.residualNorms[0] : 0.0;
    out.converged = false;
    return out;
  }
  const Index lead = cols.front();
  out.slack = res.pairs.residualNorms[lead];
  out.value = res.pairs.values[lead] + out.slack;
  out.converged = res.converged;
  return out;
}

DPlusEstimate estimateDPlusFrob(const SymmetricOperator& a, const RitzBlock& rb,
                                const LanczosConfig& innerCfg, DPlusMode mode,
                                const Tolerances& tol) {
  const Index n = a.dim();
  const Index k = rb.count();

  if (k >= n) {
    DPlusEstimate out;
    out.frob = 0.0;
    out.lambdaMax = -std::numeric_limits<double>::infinity();
    out.tag = DPlusTag::AssumedZero;
    out.conservative = true;
    return out;
  }

  if (mode == DPlusMode::Auto)
    mode = (n <= tol.denseThreshold && a.isDense()) ? DPlusMode::Oracle
                                                    : DPlusMode::Iterative;

  if (mode == DPlusMode::Oracle) {
    if (!a.isDense() && n > tol.denseThreshold)
      throw std::invalid_argument(
          "estimateDPlusFrob: oracle path needs a dense operator or a small "
          "dimension");
    return dPlusDense(a, rb, innerCfg.seed, tol);
  }

  // Both remaining modes start by probing the top of the complement.
  const DeflatedLambdaMax lm = estimateDeflatedLambdaMax(a, rb, innerCfg, tol);
  if (lm.value <= 0.0) {
    DPlusEstimate out;
    out.frob = 0.0;
    out.lambdaMax = lm.value;
    out.tag = DPlusTag::AssumedZero;
    out.conservative = lm.converged;
    return out;
  }

  // AssumeZero failed its verification; fall through to the iterative sweep.
  DPlusEstimate out;
  out.lambdaMax = lm.value;
  out.tag = DPlusTag::IterativeEstimate;
  out.conservative = lm.converged;

  const SymmetricOperator deflated = deflatedOperator(a, rb);
  const Index cap = n - k;
  Index want = std::min<Index>(std::max<Index>(innerCfg.numWanted, 4), cap);
  for (;;) {
    LanczosConfig cfg = innerCfg;
    cfg.numWanted = want;
    cfg.maxBasisSize = 0;
    const LanczosResult res = lanczosLargest(deflated, cfg, tol);
    const std::vector<Index> cols = complementColumns(res.pairs, rb.basis, tol);

    bool sawNonpositive = false;
    double sq = 0.0;
    for (const Index c : cols) {
      const double padded = res.pairs.values[c] + res.pairs.residualNorms[c];
      if (res.pairs.values[c] <= 0.0) sawNonpositive = true;
      if (padded > 0.0) sq += padded * padded;
    }
    out.frob = std::sqrt(sq);
    out.conservative = lm.converged && res.converged;

    if (sawNonpositive || want >= cap) return out;
    want = std::min(cap, 2 * want);
  }
}

}  // namespace psdcert
