#pragma once

// Dense complex linear algebra used by the rest of the library: Kronecker
// products, partial traces, Hermitian eigendecomposition and the spectral
// entropy weight. Everything here is a pure function of its inputs.

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "qshannon/config.hpp"
#include "qshannon/errors.hpp"

namespace qshannon {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Eigendecomposition of a Hermitian matrix. Eigenvalues are sorted in
/// descending order; eigenvector columns match that order and are
/// orthonormal. V * diag(lambda) * V^dagger reconstructs the input.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;
};

namespace detail {

inline Eigen::Index checked_dim_product(Eigen::Index a, Eigen::Index b,
                                        Eigen::Index max_dim,
                                        const char* what) {
  const Eigen::Index prod = a * b;
  if (a > 0 && b > 0 && prod > max_dim) {
    throw DimensionError(std::string(what) + ": result dimension " +
                         std::to_string(prod) + " exceeds the cap " +
                         std::to_string(max_dim));
  }
  return prod;
}

} // namespace detail

/// Kronecker product a (x) b. Dimensions multiply; throws DimensionError if
/// either result dimension exceeds max_dim.
template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a,
            const Eigen::MatrixBase<DerivedB>& b,
            Eigen::Index max_dim = kDefaultMaxDim) {
  detail::checked_dim_product(a.rows(), b.rows(), max_dim, "kron rows");
  detail::checked_dim_product(a.cols(), b.cols(), max_dim, "kron cols");
  return Eigen::kroneckerProduct(a.derived(), b.derived());
}

/// n-fold Kronecker power m (x) ... (x) m.
inline Matrix kron_power(const Matrix& m, int n,
                         Eigen::Index max_dim = kDefaultMaxDim) {
  if (n < 1) {
    throw DomainError("kron_power: exponent must be >= 1");
  }
  Matrix out = m;
  for (int k = 1; k < n; ++k) {
    out = kron(out, m, max_dim);
  }
  return out;
}

/// Which factor of a bipartite space survives a partial trace.
enum class Keep { left, right };

/// Partial trace of a (dim_left*dim_right)-dimensional square matrix over
/// one tensor factor. Index convention: row = i*dim_right + j with i on the
/// left factor. Trace is preserved.
template <typename Derived>
Matrix partial_trace(const Eigen::MatrixBase<Derived>& m,
                     Eigen::Index dim_left, Eigen::Index dim_right,
                     Keep keep) {
  if (dim_left < 1 || dim_right < 1) {
    throw DimensionError("partial_trace: factor dimensions must be >= 1");
  }
  if (m.rows() != m.cols() || m.rows() != dim_left * dim_right) {
    throw DimensionError(
        "partial_trace: matrix is " + std::to_string(m.rows()) + "x" +
        std::to_string(m.cols()) + " but factors give " +
        std::to_string(dim_left * dim_right));
  }
  const Matrix mm = m; // materialize the expression once
  if (keep == Keep::left) {
    Matrix out = Matrix::Zero(dim_left, dim_left);
    for (Eigen::Index i = 0; i < dim_left; ++i) {
      for (Eigen::Index k = 0; k < dim_left; ++k) {
        Complex acc(0.0, 0.0);
        for (Eigen::Index j = 0; j < dim_right; ++j) {
          acc += mm(i * dim_right + j, k * dim_right + j);
        }
        out(i, k) = acc;
      }
    }
    return out;
  }
  Matrix out = Matrix::Zero(dim_right, dim_right);
  for (Eigen::Index j = 0; j < dim_right; ++j) {
    for (Eigen::Index l = 0; l < dim_right; ++l) {
      Complex acc(0.0, 0.0);
      for (Eigen::Index i = 0; i < dim_left; ++i) {
        acc += mm(i * dim_right + j, i * dim_right + l);
      }
      out(j, l) = acc;
    }
  }
  return out;
}

/// Max-norm of m - m^dagger.
inline double hermiticity_residual(const Matrix& m) {
  if (m.size() == 0 || m.rows() != m.cols()) {
    throw DimensionError("hermiticity_residual: matrix must be square and non-empty");
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (m + m^dagger)/2 before decomposition; inputs farther than kHermitianTol
/// from Hermitian (max-norm) are rejected.
inline Spectrum hermitian_eig(const Matrix& m) {
  const double residual = hermiticity_residual(m);
  if (residual > kHermitianTol) {
    throw ValidationError("hermitian_eig: input is not Hermitian (residual " +
                          std::to_string(residual) + ")");
  }
  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericError("hermitian_eig: eigendecomposition did not converge");
  }
  Spectrum s;
  // Eigen sorts ascending; flip to descending.
  s.eigenvalues = solver.eigenvalues().reverse();
  s.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return s;
}

/// -sum_i lambda_i log2(lambda_i) over the spectrum of a Hermitian matrix
/// with unit trace, using the convention 0*log2(0) = 0. Eigenvalues below
/// kEigCutoff are treated as exact zeros; eigenvalues below -kPositivityTol
/// are rejected.
inline double spectral_log2_weighted(const Matrix& m) {
  const Spectrum s = hermitian_eig(m);
  const double trace = s.eigenvalues.sum();
  if (std::abs(trace - 1.0) > kTraceTol) {
    throw ValidationError("spectral_log2_weighted: trace is " +
                          std::to_string(trace) + ", expected 1");
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    const double lambda = s.eigenvalues[i];
    if (lambda < -kPositivityTol) {
      throw ValidationError(
          "spectral_log2_weighted: positive semidefiniteness violated "
          "(eigenvalue " + std::to_string(lambda) + ")");
    }
    if (lambda > kEigCutoff) {
      acc -= lambda * std::log2(lambda);
    }
  }
  return acc;
}

} // namespace qshannon
