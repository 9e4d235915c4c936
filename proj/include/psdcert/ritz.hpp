// Copyright (c) the psdcert developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "psdcert/operator.hpp"
#include "psdcert/types.hpp"

namespace psdcert {

/// A block of approximate eigenpairs: an orthonormal basis, the matching
/// diagonal values, and the residual columns A*basis - basis*diag(values)
/// cached together with their per-column Euclidean norms.
struct RitzBlock {
  Matrix basis;            ///< n x k, orthonormal columns
  Vector values;           ///< length k
  Side side = Side::Mixed;
  bool rayleighExact = false;  ///< values == basis^T A basis holds to tolerance
  Matrix residualColumns;  ///< n x k
  Vector residualNorms;    ///< length k

  Index dim() const { return basis.rows(); }
  Index count() const { return basis.cols(); }
  bool empty() const { return basis.cols() == 0; }
  double residualFrob() const { return residualColumns.norm(); }

  /// Dense evaluation basis * diag(values) * basis^T.
  Matrix assemble() const;

  /// Column subset, preserving order; residual data carried over.
  RitzBlock select(const std::vector<Index>& columns) const;
};

/// Builds a RitzBlock from (A, basis, values), recomputing the residual
/// columns from scratch. Validates orthonormality and the sign condition
/// implied by `side` (Positive: all values >= 0; Negative: all <= 0).
RitzBlock makeRitzBlock(const SymmetricOperator& a, Matrix basis, Vector values,
                        Side side, bool rayleighExact,
                        const Tolerances& tol = defaultTolerances());

/// Full eigendecomposition with eigenvalues sorted descending. Zero
/// eigenvalues are counted with the nonpositive block, so numPositive is the
/// number of strictly positive eigenvalues.
struct ExactEigendecomposition {
  Matrix vectors;     ///< n x n orthogonal
  Vector values;      ///< descending
  Index numPositive;

  Matrix positiveVectors() const { return vectors.leftCols(numPositive); }
  Vector positiveValues() const { return values.head(numPositive); }
  Vector nonpositiveValues() const {
    return values.tail(values.size() - numPositive);
  }
};

}  // namespace psdcert
