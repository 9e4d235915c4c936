// Copyright (c) the psdcert developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "psdcert/types.hpp"

namespace psdcert {

/// A symmetric matrix, either stored densely or given only through a
/// matvec callback with a declared dimension. Immutable after construction
/// and cheap to copy (shared internals), so instances can be shared freely
/// across threads.
class SymmetricOperator {
 public:
  using Matvec = std::function<Vector(const Vector&)>;

  /// Wraps a dense matrix. Rejects inputs whose asymmetry exceeds
  /// symTol * max(1, max|A_ij|); the stored matrix is symmetrized so that
  /// A == A^T holds exactly afterwards.
  static SymmetricOperator dense(Matrix a,
                                 const Tolerances& tol = defaultTolerances());

  /// Wraps a matvec callback with a caller-supplied upper estimate of ||A||_2.
  static SymmetricOperator fromMatvec(Index n, Matvec op, double norm2Estimate);

  /// Wraps a matvec callback; ||A||_2 is estimated by seeded power iteration.
  static SymmetricOperator fromMatvec(Index n, Matvec op, std::uint64_t seed,
                                      const Tolerances& tol);

  Index dim() const { return impl_->n; }
  bool isDense() const { return impl_->isDense; }

  /// The stored matrix; throws std::logic_error for matvec-only operators.
  const Matrix& denseMatrix() const;

  /// Dense assembly. For matvec-only operators this costs n matvecs.
  Matrix toDense() const;

  Vector apply(const Vector& x) const;
  Matrix apply(const Matrix& x) const;  ///< column-by-column for implicit operators

  /// Upper estimate of the spectral norm, used for scaling tolerances.
  double norm2Estimate() const { return impl_->norm2; }

  /// The operator -A; shares the underlying representation.
  SymmetricOperator negated() const;

 private:
  struct Impl {
    Index n = 0;
    bool isDense = false;
    Matrix a;
    Matvec op;
    double norm2 = 0.0;
  };
  std::shared_ptr<const Impl> impl_;
  SymmetricOperator() = default;
};

}  // namespace psdcert
