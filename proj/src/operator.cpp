// Copyright (c) the psdcert developers.
// SPDX-License-Identifier: Apache-2.0
#include "psdcert/operator.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "psdcert/rng.hpp"

namespace psdcert {

namespace {

double powerIterationNormEstimate(Index n, const SymmetricOperator::Matvec& op,
                                  std::uint64_t seed, int iterations) {
  if (n == 0) return 0.0;
  Rng rng(seed);
  Vector x = rng.gaussianVector(n);
  double xn = x.norm();
  if (xn == 0.0) return 0.0;
  x /= xn;
  double best = 0.0;
  for (int it = 0; it < iterations; ++it) {
    Vector y = op(x);
    const double yn = y.norm();
    best = std::max(best, yn);
    if (yn == 0.0) break;
    x = y / yn;
  }
  // Power iteration approaches ||A||_2 from below; pad so the result can be
  // used as an upper estimate for tolerance scaling.
  return 1.1 * best;
}

}  // namespace

SymmetricOperator SymmetricOperator::dense(Matrix a, const Tolerances& tol) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("SymmetricOperator: matrix must be square");
  const Index n = a.rows();
  double maxAbs = 0.0, maxAsym = 0.0;
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      maxAbs = std::max(maxAbs, std::abs(a(i, j)));
      if (i < j) maxAsym = std::max(maxAsym, std::abs(a(i, j) - a(j, i)));
    }
  }
  if (!(maxAsym <= tol.symTol * std::max(1.0, maxAbs)))
    throw std::invalid_argument("SymmetricOperator: matrix is not symmetric");

  Matrix sym = 0.5 * (a + a.transpose());
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->isDense = true;
  // ||A||_2 <= min(||A||_inf, ||A||_F) for symmetric A; cheap upper estimate.
  const double normInf = sym.cwiseAbs().rowwise().sum().maxCoeff();
  impl->norm2 = std::min(normInf, sym.norm());
  if (n == 0) impl->norm2 = 0.0;
  impl->a = std::move(sym);

  SymmetricOperator out;
  out.impl_ = std::move(impl);
  return out;
}

SymmetricOperator SymmetricOperator::fromMatvec(Index n, Matvec op,
                                                double norm2Estimate) {
  if (n < 0) throw std::invalid_argument("SymmetricOperator: negative dimension");
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->isDense = false;
  impl->op = std::move(op);
  impl->norm2 = norm2Estimate;
  SymmetricOperator out;
  out.impl_ = std::move(impl);
  return out;
}

SymmetricOperator SymmetricOperator::fromMatvec(Index n, Matvec op,
                                                std::uint64_t seed,
                                                const Tolerances& tol) {
  const double est = powerIterationNormEstimate(n, op, seed, tol.powerIterations);
  return fromMatvec(n, std::move(op), est);
}

const Matrix& SymmetricOperator::denseMatrix() const {
  if (!impl_->isDense)
    throw std::logic_error("SymmetricOperator: no dense storage available");
  return impl_->a;
}

Matrix SymmetricOperator::toDense() const {
  if (impl_->isDense) return impl_->a;
  const Index n = impl_->n;
  Matrix out(n, n);
  Vector e = Vector::Zero(n);
  for (Index j = 0; j < n; ++j) {
    e[j] = 1.0;
    out.col(j) = impl_->op(e);
    e[j] = 0.0;
  }
  return 0.5 * (out + out.transpose());
}

Vector SymmetricOperator::apply(const Vector& x) const {
  if (x.size() != impl_->n)
    throw std::invalid_argument("SymmetricOperator: dimension mismatch");
  return impl_->isDense ? Vector(impl_->a * x) : impl_->op(x);
}

Matrix SymmetricOperator::apply(const Matrix& x) const {
  if (x.rows() != impl_->n)
    throw std::invalid_argument("SymmetricOperator: dimension mismatch");
  if (impl_->isDense) return impl_->a * x;
  Matrix out(x.rows(), x.cols());
  for (Index j = 0; j < x.cols(); ++j) out.col(j) = impl_->op(x.col(j));
  return out;
}

SymmetricOperator SymmetricOperator::negated() const {
  auto base = impl_;
  if (base->isDense) {
    auto impl = std::make_shared<Impl>();
    impl->n = base->n;
    impl->isDense = true;
    impl->a = -base->a;
    impl->norm2 = base->norm2;
    SymmetricOperator out;
    out.impl_ = std::move(impl);
    return out;
  }
  auto impl = std::make_shared<Impl>();
  impl->n = base->n;
  impl->isDense = false;
  impl->op = [base](const Vector& x) { return Vector(-base->op(x)); };
  impl->norm2 = base->norm2;
  SymmetricOperator out;
  out.impl_ = std::move(impl);
  return out;
}

}  // namespace psdcert
