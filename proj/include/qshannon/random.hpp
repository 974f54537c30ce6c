#pragma once

// Seeded sampling helpers. Generators are always explicit parameters; there
// is no global RNG state, so independent streams can run concurrently.

#include <cstdint>
#include <random>

#include "qshannon/tensor_linalg.hpp"

namespace qshannon {

using Rng = std::mt19937_64;

/// Engine for (seed, stream). Distinct streams from the same master seed are
/// independent for all practical purposes and reproducible across runs.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Matrix of independent standard complex Gaussians (N(0,1) real and
/// imaginary parts).
Matrix random_complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-like random unitary: Q factor of a complex Gaussian matrix.
Matrix random_unitary(Eigen::Index dim, Rng& rng);

/// Point sampled uniformly on the probability simplex (normalized
/// exponentials).
Eigen::VectorXd random_simplex_point(Eigen::Index n, Rng& rng);

} // namespace qshannon
