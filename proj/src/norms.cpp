// Copyright (c) the psdcert developers.
// SPDX-License-Identifier: Apache-2.0
#include "psdcert/norms.hpp"

#include <Eigen/QR>
#include <cmath>
#include <stdexcept>

#include "psdcert/dense_eig.hpp"
#include "psdcert/rng.hpp"

namespace psdcert {

double frobeniusNorm(const Matrix& m) { return m.norm(); }

double spectralNorm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  // Gram matrix of the smaller side keeps the eigensolve as small as possible.
  Matrix gram;
  if (m.rows() <= m.cols())
    gram = m * m.transpose();
  else
    gram = m.transpose() * m;
  gram = 0.5 * (gram + gram.transpose());
  const Vector vals = symEigValues(gram);
  return std::sqrt(std::max(vals[0], 0.0));
}

Matrix orthonormalComplement(const Matrix& v, std::uint64_t seed,
                             const Tolerances& tol) {
  const Index n = v.rows();
  const Index k = v.cols();
  if (k > n)
    throw std::invalid_argument(
        "orthonormalComplement: more columns than rows");
  if (k > 0) {
    const double orthErr =
        (v.transpose() * v - Matrix::Identity(k, k)).norm();
    if (!(orthErr <= tol.orthTol))
      throw std::invalid_argument(
          "orthonormalComplement: input columns are not orthonormal");
  }
  if (k == n) return Matrix(n, 0);

  Rng rng(seed);
  Matrix extended(n, n);
  if (k > 0) extended.leftCols(k) = v;
  extended.rightCols(n - k) = rng.gaussianMatrix(n, n - k);
  Eigen::HouseholderQR<Matrix> qr(extended);
  Matrix q = qr.householderQ();
  return q.rightCols(n - k);
}

Matrix randomOrthonormal(Index n, Index k, std::uint64_t seed) {
  if (k > n) throw std::invalid_argument("randomOrthonormal: k > n");
  if (k == 0) return Matrix(n, 0);
  Rng rng(seed);
  Matrix g = rng.gaussianMatrix(n, k);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = Matrix(qr.householderQ()).leftCols(k);
  // Fix signs from the R diagonal so the factor is unique.
  for (Index j = 0; j < k; ++j)
    if (qr.matrixQR()(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

}  // namespace psdcert
