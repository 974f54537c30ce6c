#include "qshannon/states.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qshannon {

DensityMatrix::DensityMatrix(Matrix m) : mat_(std::move(m)) {
  if (mat_.size() == 0 || mat_.rows() != mat_.cols()) {
    throw DimensionError("DensityMatrix: matrix must be square and non-empty");
  }
  const double herm = hermiticity_residual(mat_);
  if (herm > kHermitianTol) {
    throw ValidationError("DensityMatrix: not Hermitian (residual " +
                          std::to_string(herm) + ")");
  }
  const double trace = mat_.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    throw ValidationError("DensityMatrix: trace is " + std::to_string(trace) +
                          ", expected 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (mat_ + mat_.adjoint()),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("DensityMatrix: eigenvalue check did not converge");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kPositivityTol) {
    throw ValidationError(
        "DensityMatrix: not positive semidefinite (min eigenvalue " +
        std::to_string(min_eig) + ")");
  }
}

Source::Source(std::vector<Vector> states, Eigen::VectorXd probs)
    : states_(std::move(states)), probs_(std::move(probs)) {
  if (states_.empty()) {
    throw ValidationError("Source: needs at least one state");
  }
  if (static_cast<Eigen::Index>(states_.size()) != probs_.size()) {
    throw ValidationError("Source: " + std::to_string(states_.size()) +
                          " states but " + std::to_string(probs_.size()) +
                          " probabilities");
  }
  const Eigen::Index d = states_.front().size();
  if (d < 1) {
    throw ValidationError("Source: states must be non-empty vectors");
  }
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].size() != d) {
      throw ValidationError("Source: state " + std::to_string(i) +
                            " has dimension " + std::to_string(states_[i].size()) +
                            ", expected " + std::to_string(d));
    }
    const double norm = states_[i].norm();
    if (std::abs(norm - 1.0) > kUnitNormTol) {
      throw ValidationError("Source: state " + std::to_string(i) +
                            " has norm " + std::to_string(norm) +
                            ", expected 1");
    }
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < probs_.size(); ++i) {
    if (probs_[i] < 0.0) {
      throw ValidationError("Source: probability " + std::to_string(i) +
                            " is negative (" + std::to_string(probs_[i]) + ")");
    }
    sum += probs_[i];
  }
  if (std::abs(sum - 1.0) > kProbSumTol) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", sum);
    throw ValidationError(std::string("Source: probabilities sum to ") + buf);
  }
}

DensityMatrix density_of_source(const Source& s) {
  const Eigen::Index d = s.dim();
  Matrix rho = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < s.size(); ++i) {
    rho += s.probs()[i] * (s.states()[i] * s.states()[i].adjoint());
  }
  return DensityMatrix(rho);
}

Purification purify(const Source& s) {
  const Eigen::Index n = static_cast<Eigen::Index>(s.size());
  const Eigen::Index d = s.dim();
  Vector psi = Vector::Zero(n * d);
  for (Eigen::Index i = 0; i < n; ++i) {
    psi.segment(i * d, d) = std::sqrt(s.probs()[i]) * s.states()[i];
  }
  return Purification{std::move(psi), n, d};
}

DensityMatrix reference_state(const Source& s) {
  const Eigen::Index n = static_cast<Eigen::Index>(s.size());
  Matrix rho_r(n, n);
  // Entry (i,j) carries <psi_j|psi_i> so that rho_r equals the partial trace
  // of the purification over the system factor, not its transpose.
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex overlap = s.states()[j].dot(s.states()[i]);
      rho_r(i, j) = std::sqrt(s.probs()[i] * s.probs()[j]) * overlap;
    }
  }
  return DensityMatrix(rho_r);
}

DensityMatrix random_density(Eigen::Index dim, Rng& rng) {
  if (dim < 1) {
    throw DimensionError("random_density: dimension must be >= 1");
  }
  const Matrix g = random_complex_gaussian(dim, dim, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(m);
}

Source random_source(Eigen::Index dim, std::size_t n_states, Rng& rng) {
  if (dim < 1 || n_states < 1) {
    throw DimensionError("random_source: dimension and state count must be >= 1");
  }
  std::vector<Vector> states;
  states.reserve(n_states);
  for (std::size_t i = 0; i < n_states; ++i) {
    Vector v = random_complex_gaussian(dim, 1, rng);
    states.push_back(v / v.norm());
  }
  Eigen::VectorXd probs =
      random_simplex_point(static_cast<Eigen::Index>(n_states), rng);
  return Source(std::move(states), std::move(probs));
}

} // namespace qshannon
