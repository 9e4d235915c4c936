// Copyright (c) the psdcert developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "psdcert/types.hpp"

namespace psdcert {

struct SymEig {
  Vector values;   ///< eigenvalues, sorted descending
  Matrix vectors;  ///< matching eigenvectors as columns
};

/// Full eigendecomposition of a symmetric matrix. Cyclic Jacobi for small
/// matrices (n <= 64), Householder tridiagonalization followed by
/// implicit-shift QL above. Self-contained; no LAPACK dependency.
SymEig symEig(const Matrix& s);

/// Eigenvalues only (descending); skips all eigenvector accumulation.
Vector symEigValues(const Matrix& s);

}  // namespace psdcert
