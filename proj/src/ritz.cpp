// Copyright (c) the psdcert developers.
// SPDX-License-Identifier: Apache-2.0
#include "psdcert/ritz.hpp"

#include <stdexcept>

namespace psdcert {

Matrix RitzBlock::assemble() const {
  if (empty()) return Matrix::Zero(dim(), dim());
  Matrix p = basis * values.asDiagonal() * basis.transpose();
  return 0.5 * (p + p.transpose());
}

RitzBlock RitzBlock::select(const std::vector<Index>& columns) const {
  RitzBlock out;
  out.side = side;
  out.rayleighExact = rayleighExact;
  out.basis.resize(dim(), static_cast<Index>(columns.size()));
  out.residualColumns.resize(dim(), static_cast<Index>(columns.size()));
  out.values.resize(static_cast<Index>(columns.size()));
  out.residualNorms.resize(static_cast<Index>(columns.size()));
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const Index c = columns[i];
    out.basis.col(static_cast<Index>(i)) = basis.col(c);
    out.residualColumns.col(static_cast<Index>(i)) = residualColumns.col(c);
    out.values[static_cast<Index>(i)] = values[c];
    out.residualNorms[static_cast<Index>(i)] = residualNorms[c];
  }
  return out;
}

RitzBlock makeRitzBlock(const SymmetricOperator& a, Matrix basis, Vector values,
                        Side side, bool rayleighExact, const Tolerances& tol) {
  if (basis.rows() != a.dim())
    throw std::invalid_argument("makeRitzBlock: basis dimension mismatch");
  if (basis.cols() != values.size())
    throw std::invalid_argument("makeRitzBlock: values/basis size mismatch");
  const Index k = basis.cols();
  if (k > 0) {
    const double orthErr =
        (basis.transpose() * basis - Matrix::Identity(k, k)).norm();
    if (!(orthErr <= tol.orthTol))
      throw std::invalid_argument("makeRitzBlock: basis is not orthonormal");
  }
  if (side == Side::Positive && k > 0 && values.minCoeff() < 0.0)
    throw std::invalid_argument(
        "makeRitzBlock: negative value in a Positive block");
  if (side == Side::Negative && k > 0 && values.maxCoeff() > 0.0)
    throw std::invalid_argument(
        "makeRitzBlock: positive value in a Negative block");

  RitzBlock rb;
  rb.side = side;
  rb.rayleighExact = rayleighExact;
  rb.residualColumns = a.apply(basis) - basis * values.asDiagonal();
  rb.residualNorms.resize(k);
  for (Index i = 0; i < k; ++i)
    rb.residualNorms[i] = rb.residualColumns.col(i).norm();
  rb.basis = std::move(basis);
  rb.values = std::move(values);
  return rb;
}

}  // namespace psdcert
