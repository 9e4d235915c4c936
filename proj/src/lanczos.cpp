// Copyright (c) the psdcert developers.
// SPDX-License-Identifier: Apache-2.0
#include "psdcert/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "psdcert/dense_eig.hpp"
#include "psdcert/rng.hpp"

namespace psdcert {

namespace {

// Two Gram-Schmidt passes against the first m columns of q.
void reorthogonalize(const Matrix& q, Index m, Vector& w) {
  if (m == 0) return;
  auto basis = q.leftCols(m);
  for (int pass = 0; pass < 2; ++pass) w.noalias() -= basis * (basis.transpose() * w);
}

struct RitzSet {
  Matrix vectors;    // n x m, descending by value
  Vector values;     // m
  Matrix residuals;  // n x m
  Vector resNorms;   // m
};

// Dense Rayleigh-Ritz on the current basis using the cached products AQ.
RitzSet extractRitz(const Matrix& q, const Matrix& aq, Index m) {
  Matrix t = q.leftCols(m).transpose() * aq.leftCols(m);
  t = 0.5 * (t + t.transpose());
  SymEig eig = symEig(t);
  RitzSet out;
  out.vectors.noalias() = q.leftCols(m) * eig.vectors;
  out.values = eig.values;
  out.residuals.noalias() =
      aq.leftCols(m) * eig.vectors - out.vectors * eig.values.asDiagonal();
  out.resNorms.resize(m);
  for (Index i = 0; i < m; ++i) out.resNorms[i] = out.residuals.col(i).norm();
  return out;
}

RitzBlock blockFromColumns(const RitzSet& rs, const std::vector<Index>& cols,
                           Side side, bool rayleighExact) {
  RitzBlock rb;
  rb.side = side;
  rb.rayleighExact = rayleighExact;
  const Index k = static_cast<Index>(cols.size());
  rb.basis.resize(rs.vectors.rows(), k);
  rb.residualColumns.resize(rs.vectors.rows(), k);
  rb.values.resize(k);
  rb.residualNorms.resize(k);
  for (Index i = 0; i < k; ++i) {
    rb.basis.col(i) = rs.vectors.col(cols[i]);
    rb.residualColumns.col(i) = rs.residuals.col(cols[i]);
    rb.values[i] = rs.values[cols[i]];
    rb.residualNorms[i] = rs.resNorms[cols[i]];
  }
  return rb;
}

RitzBlock topBlock(const RitzSet& rs, Index nev) {
  std::vector<Index> cols(nev);
  for (Index i = 0; i < nev; ++i) cols[i] = i;
  return blockFromColumns(rs, cols, Side::Mixed, /*rayleighExact=*/true);
}

TraceEntry makeTraceEntry(const RitzSet& rs, Index nev, int iteration,
                          Index basisSize, Index numConverged) {
  TraceEntry entry;
  entry.iteration = iteration;
  entry.basisSize = basisSize;
  entry.numConverged = numConverged;
  entry.leadingResidualNorms = rs.resNorms.head(nev);
  std::vector<Index> pos;
  for (Index i = 0; i < nev; ++i)
    if (rs.values[i] > 0.0) pos.push_back(i);
  entry.positivePairs =
      blockFromColumns(rs, pos, Side::Positive, /*rayleighExact=*/true);
  return entry;
}

}  // namespace

LanczosResult lanczosLargest(const SymmetricOperator& a,
                             const LanczosConfig& cfg, const Tolerances& tol) {
  const Index n = a.dim();
  const Index nev = cfg.numWanted;
  Index ncv = cfg.maxBasisSize;
  if (ncv == 0) ncv = std::min(n, std::max(2 * nev + 1, Index{20}));
  if (nev < 1 || nev > ncv || ncv > n)
    throw std::invalid_argument(
        "lanczosLargest: need 1 <= numWanted <= maxBasisSize <= n");
  if (!(cfg.convergenceTol > 0.0))
    throw std::invalid_argument("lanczosLargest: convergenceTol must be > 0");
  if (cfg.maxRestarts < 1)
    throw std::invalid_argument("lanczosLargest: maxRestarts must be >= 1");

  const double normEst = a.norm2Estimate();
  const double convThresh = cfg.convergenceTol * normEst;
  const double breakdownTol =
      std::max(tol.breakdownFactor * normEst, 1e-300);

  Rng rng(cfg.seed);
  Matrix q(n, ncv), aq(n, ncv);

  auto freshVector = [&](Index m) {
    // Random start orthogonal to everything kept so far.
    for (int attempt = 0; attempt < 8; ++attempt) {
      Vector w = rng.gaussianVector(n);
      reorthogonalize(q, m, w);
      const double norm = w.norm();
      if (norm > 1e-8) return Vector(w / norm);
    }
    throw std::runtime_error("lanczosLargest: cannot produce a start vector");
  };

  q.col(0) = freshVector(0);
  Index m = 1;

  LanczosResult result;
  result.trace.matvecs = 0;
  bool verified = false;

  for (int cycle = 0; cycle < cfg.maxRestarts; ++cycle) {
    // Grow the basis; the matvec of the newest column doubles as the
    // expansion direction.
    while (m < ncv) {
      Vector w = a.apply(q.col(m - 1));
      aq.col(m - 1) = w;
      ++result.trace.matvecs;
      reorthogonalize(q, m, w);
      double beta = w.norm();
      if (beta <= breakdownTol) {
        q.col(m) = freshVector(m);
      } else {
        q.col(m) = w / beta;
      }
      ++m;
    }
    // Matvec of the final column, which also yields the natural Krylov
    // continuation direction for the next cycle.
    Vector cont;
    {
      Vector w = a.apply(q.col(ncv - 1));
      aq.col(ncv - 1) = w;
      ++result.trace.matvecs;
      reorthogonalize(q, ncv, w);
      const double beta = w.norm();
      cont = (beta > breakdownTol) ? Vector(w / beta) : Vector();
    }

    RitzSet rs = extractRitz(q, aq, ncv);

    Index numConverged = 0;
    for (Index i = 0; i < nev; ++i)
      if (rs.resNorms[i] <= convThresh) ++numConverged;
    const bool allConverged = (numConverged == nev);

    result.trace.entries.push_back(
        makeTraceEntry(rs, nev, cycle, ncv, numConverged));

    if (allConverged && (verified || ncv == n)) {
      result.pairs = topBlock(rs, nev);
      result.converged = true;
      result.trace.converged = true;
      return result;
    }

    if (cycle + 1 >= cfg.maxRestarts) {
      result.pairs = topBlock(rs, nev);
      result.converged = false;
      result.trace.converged = false;
      return result;
    }

    // Thick restart: keep the leading Ritz vectors and continue the Krylov
    // chain. Once everything has converged, inject a fresh random direction
    // instead and demand that the leading pairs survive one more cycle;
    // this catches multiple eigenvalues whose second copy the chain missed.
    const Index keep =
        std::max<Index>(0, std::min(ncv - 2, nev + (ncv - nev) / 2));
    q.leftCols(keep) = rs.vectors.leftCols(keep);
    aq.leftCols(keep) = rs.residuals.leftCols(keep) +
                        rs.vectors.leftCols(keep) *
                            rs.values.head(keep).asDiagonal();
    if (allConverged) {
      verified = true;
      cont = freshVector(keep);
    } else {
      verified = false;
      if (cont.size() != 0) {
        // Re-orthogonalize against the kept block (it spans a subspace of
        // the old basis, but rounding drifts).
        reorthogonalize(q, keep, cont);
        const double beta = cont.norm();
        cont = (beta > breakdownTol) ? Vector(cont / beta) : Vector();
      }
      if (cont.size() == 0) cont = freshVector(keep);
    }
    q.col(keep) = cont;
    m = keep + 1;
  }

  throw std::logic_error("lanczosLargest: unreachable");
}

RitzBlock rayleighRitz(const SymmetricOperator& a, const Matrix& q,
                       const Tolerances& tol) {
  const Index m = q.cols();
  if (q.rows() != a.dim())
    throw std::invalid_argument("rayleighRitz: basis dimension mismatch");
  if (m == 0) {
    RitzBlock rb;
    rb.basis = Matrix(a.dim(), 0);
    rb.values = Vector(0);
    rb.residualColumns = Matrix(a.dim(), 0);
    rb.residualNorms = Vector(0);
    rb.rayleighExact = true;
    return rb;
  }
  const double orthErr = (q.transpose() * q - Matrix::Identity(m, m)).norm();
  if (!(orthErr <= tol.orthTol))
    throw std::invalid_argument("rayleighRitz: basis is not orthonormal");

  Matrix aqm = a.apply(q);
  Matrix t = q.transpose() * aqm;
  t = 0.5 * (t + t.transpose());
  SymEig eig = symEig(t);

  RitzBlock rb;
  rb.rayleighExact = true;
  rb.side = Side::Mixed;
  rb.basis.noalias() = q * eig.vectors;
  rb.values = eig.values;
  rb.residualColumns.noalias() =
      aqm * eig.vectors - rb.basis * eig.values.asDiagonal();
  rb.residualNorms.resize(m);
  for (Index i = 0; i < m; ++i)
    rb.residualNorms[i] = rb.residualColumns.col(i).norm();
  return rb;
}

RitzBlock splitBySign(const RitzBlock& rb, Side side) {
  if (side == Side::Mixed)
    throw std::invalid_argument("splitBySign: side must be Positive or Negative");
  std::vector<Index> cols;
  for (Index i = 0; i < rb.count(); ++i) {
    const bool keep =
        (side == Side::Positive) ? (rb.values[i] > 0.0) : (rb.values[i] <= 0.0);
    if (keep) cols.push_back(i);
  }
  RitzBlock out = rb.select(cols);
  out.side = side;
  return out;
}

}  // namespace psdcert
