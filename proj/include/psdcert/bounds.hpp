// Copyright (c) the psdcert developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "psdcert/operator.hpp"
#include "psdcert/ritz.hpp"
#include "psdcert/types.hpp"

namespace psdcert {

/// sqrt(r^2 + c^2 + d^2): valid for any orthonormal basis with PSD values.
double theorem1Bound(double residualFrob, double crossTermFrob,
                     double dPlusFrob);

/// sqrt(2 r^2 + d^2): requires values == basis^T A basis (Rayleigh-Ritz).
double corollary1Bound(double residualFrob, double dPlusFrob);

/// sqrt(2) * r: additionally requires the complement block to be negative
/// semidefinite, which makes the correction term vanish.
double corollary2Bound(double residualFrob);

enum class NegativeVariant { Thm1, Cor1, Cor2 };

/// The mirrored bounds for approximate projections built from negative
/// eigenpairs as A - basis * diag(values) * basis^T, with the negative part
/// of the complement in place of the positive part.
double negativeSideBound(double residualFrob, double crossTermFrob,
                         double dMinusFrob, NegativeVariant variant);

/// sqrt(2 r^2 + 2 r d + d^2), certifying ||A (P_exact - basis basis^T)||_F
/// where P_exact is the orthogonal projector onto the positive eigenspace.
double subspaceErrorBound(double residualFrob, double dPlusFrob);

/// Whether the projection error and the subspace error are within
/// residualFrob (plus round-off slack) of each other, as they must be when
/// computed from the same block.
bool sandwichGap(double projErrorFrob, double subspaceErrorFrob,
                 double residualFrob, double scale = 1.0);

struct NaiveGapBound {
  double bound = 0.0;  ///< 2 ||R||_F ||A||_2 / gap
  double gap = 0.0;    ///< min |value_i - nonpositive eigenvalue_j|
};

/// The classical perturbation-theory baseline, which degrades as the gap
/// between computed positive values and exact nonpositive eigenvalues
/// shrinks. Comparison only, never a certificate. An empty nonpositive
/// block yields gap = +infinity and bound = 0.
NaiveGapBound naiveGapBound(const SymmetricOperator& a, const RitzBlock& rb,
                            const ExactEigendecomposition& exact);

struct DropResult {
  RitzBlock kept;
  std::vector<Index> dropped;
};

/// Removes the pairs whose residual dominates both their own value and the
/// top of the complement spectrum: (sqrt(2)-1) ||r_i|| > max(value_i,
/// dPlusLambdaMax). Recomputing the Rayleigh-Ritz bound for the kept block
/// never makes it worse. Requires a Positive, rayleighExact block.
DropResult dropRitzPairs(const RitzBlock& rb, double dPlusLambdaMax);

/// One row of an accuracy study: oracle error against certificate and the
/// gap-dependent baseline.
struct BoundComparison {
  double exactError = 0.0;
  double certBound = 0.0;
  double naiveBound = 0.0;
  double gap = 0.0;
  double ratioSharpness = 0.0;  ///< exactError^2 / residualFrob^2
};

}  // namespace psdcert
