// random.hpp — seeded sampling helpers: Haar-random states and unitaries,
// Gaussian Hermitian matrices. All draws go through a caller-supplied engine
// so concurrent runs stay deterministic.
#pragma once

#include <random>

#include "qslmct/operator_core.hpp"

namespace qsl {

using Rng = std::mt19937_64;

/// Standard normal via explicit Box-Muller; avoids relying on the library's
/// std::normal_distribution sequence, which is implementation-defined.
double gaussian(Rng& rng);

/// Uniform on [lo, hi).
double uniform(Rng& rng, double lo, double hi);

/// Haar-random unit state of dimension d.
CVector haar_random_state(Eigen::Index d, Rng& rng);

/// Haar-random element of SU(d) (QR of a Ginibre matrix, phase-fixed,
/// determinant-normalized).
UnitaryOperator haar_random_unitary(Eigen::Index d, Rng& rng);

/// Traceless GUE-like Hermitian matrix of dimension d.
HermitianGenerator random_hermitian(Eigen::Index d, Rng& rng);

}  // namespace qsl
