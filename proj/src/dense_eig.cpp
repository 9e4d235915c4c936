// Copyright (c) the psdcert developers.
// SPDX-License-Identifier: Apache-2.0
#include "psdcert/dense_eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace psdcert {

namespace {

constexpr Index kJacobiLimit = 64;

// Cyclic Jacobi with the classical threshold strategy. Overwrites `a`,
// accumulates rotations into `v` when requested. Eigenvalues land on the
// diagonal of `a`.
void jacobiEig(Matrix& a, Matrix* v, int maxSweeps = 64) {
  const Index n = a.rows();
  if (v) *v = Matrix::Identity(n, n);
  if (n < 2) return;

  const double normF = a.norm();
  if (normF == 0.0) return;

  for (int sweep = 0; sweep < maxSweeps; ++sweep) {
    double off = 0.0;
    for (Index p = 0; p < n; ++p)
      for (Index q = p + 1; q < n; ++q) off += 2.0 * a(p, q) * a(p, q);
    off = std::sqrt(off);
    if (off <= 1e-15 * normF) return;

    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-18 * normF) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                             : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        if (v) {
          for (Index k = 0; k < n; ++k) {
            const double vkp = (*v)(k, p), vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - s * vkq;
            (*v)(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  // Jacobi converges quadratically; exhausting the sweep budget would mean
  // the input was not finite.
  throw std::runtime_error("jacobiEig: no convergence (non-finite input?)");
}

// Householder reduction to tridiagonal form (Martin-Reinsch-Wilkinson).
// On exit d holds the diagonal, e the subdiagonal (e[0] = 0). When
// `vectors` is set, `a` is overwritten with the accumulated orthogonal Q.
void tridiagonalize(Matrix& a, Vector& d, Vector& e, bool vectors) {
  const Index n = a.rows();
  d.resize(n);
  e.resize(n);
  if (n == 0) return;

  for (Index i = n - 1; i >= 1; --i) {
    const Index l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (Index k = 0; k <= l; ++k) scale += std::abs(a(i, k));
      if (scale == 0.0) {
        e[i] = a(i, l);
      } else {
        for (Index k = 0; k <= l; ++k) {
          a(i, k) /= scale;
          h += a(i, k) * a(i, k);
        }
        double f = a(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a(i, l) = f - g;
        f = 0.0;
        for (Index j = 0; j <= l; ++j) {
          if (vectors) a(j, i) = a(i, j) / h;
          g = 0.0;
          for (Index k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
          for (Index k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
          e[j] = g / h;
          f += e[j] * a(i, j);
        }
        const double hh = f / (h + h);
        for (Index j = 0; j <= l; ++j) {
          f = a(i, j);
          e[j] = g = e[j] - hh * f;
          for (Index k = 0; k <= j; ++k) a(j, k) -= f * e[k] + g * a(i, k);
        }
      }
    } else {
      e[i] = a(i, l);
    }
    d[i] = h;
  }

  d[0] = 0.0;
  e[0] = 0.0;
  if (vectors) {
    for (Index i = 0; i < n; ++i) {
      const Index l = i;
      if (d[i] != 0.0) {
        for (Index j = 0; j < l; ++j) {
          double g = 0.0;
          for (Index k = 0; k < l; ++k) g += a(i, k) * a(k, j);
          for (Index k = 0; k < l; ++k) a(k, j) -= g * a(k, i);
        }
      }
      d[i] = a(i, i);
      a(i, i) = 1.0;
      for (Index j = 0; j < l; ++j) a(j, i) = a(i, j) = 0.0;
    }
  } else {
    for (Index i = 0; i < n; ++i) d[i] = a(i, i);
  }
}

// Implicit-shift QL iteration on a tridiagonal (d, e). Rotations are
// accumulated into the columns of `z` when provided.
void tridiagQL(Vector& d, Vector& e, Matrix* z) {
  const Index n = d.size();
  if (n == 0) return;
  for (Index i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (Index l = 0; l < n; ++l) {
    int iter = 0;
    Index m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd +
                                  std::numeric_limits<double>::min())
          break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw std::runtime_error("tridiagQL: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        Index i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            for (Index k = 0; k < z->rows(); ++k) {
              f = (*z)(k, i + 1);
              (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
              (*z)(k, i) = c * (*z)(k, i) - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

void sortDescending(Vector& values, Matrix* vectors) {
  const Index n = values.size();
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return values[a] > values[b]; });
  Vector sorted(n);
  for (Index i = 0; i < n; ++i) sorted[i] = values[order[i]];
  values = sorted;
  if (vectors) {
    Matrix vs(vectors->rows(), n);
    for (Index i = 0; i < n; ++i) vs.col(i) = vectors->col(order[i]);
    *vectors = vs;
  }
}

}  // namespace

SymEig symEig(const Matrix& s) {
  if (s.rows() != s.cols())
    throw std::invalid_argument("symEig: matrix must be square");
  const Index n = s.rows();
  SymEig out;
  if (n == 0) {
    out.values = Vector(0);
    out.vectors = Matrix(0, 0);
    return out;
  }

  if (n <= kJacobiLimit) {
    Matrix a = s;
    jacobiEig(a, &out.vectors);
    out.values = a.diagonal();
  } else {
    Matrix a = s;
    Vector d, e;
    tridiagonalize(a, d, e, /*vectors=*/true);
    tridiagQL(d, e, &a);
    out.values = d;
    out.vectors = std::move(a);
  }
  sortDescending(out.values, &out.vectors);
  return out;
}

Vector symEigValues(const Matrix& s) {
  if (s.rows() != s.cols())
    throw std::invalid_argument("symEigValues: matrix must be square");
  const Index n = s.rows();
  if (n == 0) return Vector(0);

  Matrix a = s;
  Vector d, e;
  tridiagonalize(a, d, e, /*vectors=*/false);
  tridiagQL(d, e, nullptr);
  sortDescending(d, nullptr);
  return d;
}

}  // namespace psdcert
