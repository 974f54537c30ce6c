#pragma once

#include <Eigen/Core>

namespace qshannon {

// Numeric tolerances shared across the library. Double-precision
// eigensolvers leave residues around 1e-13 on rank-deficient states,
// so validity checks sit a few orders of magnitude above that.
inline constexpr double kHermitianTol = 1e-9;   // max-norm of m - m^dagger
inline constexpr double kPositivityTol = 1e-10; // eigenvalues may dip this far below zero
inline constexpr double kTraceTol = 1e-8;       // |tr - 1| for density matrices
inline constexpr double kUnitNormTol = 1e-10;   // state vector normalization
inline constexpr double kProbSumTol = 1e-10;    // probability vectors
inline constexpr double kEigCutoff = 1e-12;     // eigenvalues below this count as exact zeros
inline constexpr double kCptpTol = 1e-9;        // Kraus completeness-sum residual, max-norm
inline constexpr double kFidelityFormTol = 1e-9; // ensemble vs purification cross-check
inline constexpr double kBoundSlackTol = 1e-8;  // converse reports count as satisfied above -this

// Size caps for dense desk-scale work.
inline constexpr Eigen::Index kDefaultMaxDim = 4096;
inline constexpr Eigen::Index kDefaultMaxKraus = 4096;

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

} // namespace qshannon
