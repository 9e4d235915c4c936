// Copyright (c) the psdcert developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "psdcert/types.hpp"

namespace psdcert {

/// sqrt(sum of squared entries).
double frobeniusNorm(const Matrix& m);

/// Largest singular value, computed through the symmetric eigensolver on the
/// Gram matrix of the smaller side.
double spectralNorm(const Matrix& m);

/// An orthonormal basis of the nullspace of V^T, obtained from a full QR of
/// V extended with seeded Gaussian columns. Requires V itself orthonormal.
Matrix orthonormalComplement(const Matrix& v, std::uint64_t seed = 7,
                             const Tolerances& tol = defaultTolerances());

/// Random n x k matrix with orthonormal columns (QR of a Gaussian draw,
/// sign-fixed so the result is deterministic in the seed).
Matrix randomOrthonormal(Index n, Index k, std::uint64_t seed);

}  // namespace psdcert
