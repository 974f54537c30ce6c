#pragma once

// Sources (pure-state ensembles), density matrices and purifications.
// Values are immutable after construction and safe to share across threads.

#include <cstdint>
#include <vector>

#include "qshannon/random.hpp"
#include "qshannon/tensor_linalg.hpp"

namespace qshannon {

/// Hermitian, positive semidefinite, unit-trace matrix. The constructor
/// validates all three invariants and throws ValidationError naming the
/// failing one.
class DensityMatrix {
public:
  explicit DensityMatrix(Matrix m);

  const Matrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

private:
  Matrix mat_;
};

/// Ensemble {p_i, |psi_i>} of pure states of a common dimension. States may
/// be non-orthogonal; each must be normalized and the probabilities must
/// form a distribution.
class Source {
public:
  Source(std::vector<Vector> states, Eigen::VectorXd probs);

  const std::vector<Vector>& states() const { return states_; }
  const Eigen::VectorXd& probs() const { return probs_; }
  std::size_t size() const { return states_.size(); }
  Eigen::Index dim() const { return states_.front().size(); }

private:
  std::vector<Vector> states_;
  Eigen::VectorXd probs_;
};

/// Pure state on reference (x) system whose reduction over the reference
/// equals the source density matrix. The reference factor comes first in
/// the tensor order.
struct Purification {
  Vector vector;
  Eigen::Index ref_dim;
  Eigen::Index sys_dim;
};

/// rho = sum_i p_i |psi_i><psi_i|.
DensityMatrix density_of_source(const Source& s);

/// Canonical purification sum_i sqrt(p_i) |i>_R (x) |psi_i> with the
/// computational basis of an N-dimensional reference space.
Purification purify(const Source& s);

/// Reference-side state: the N x N matrix sqrt(p_i p_j) <psi_i|psi_j> on
/// |i><j|. Its entropy equals the entropy of the source density matrix.
DensityMatrix reference_state(const Source& s);

/// G G^dagger / tr for G a dim x dim standard complex Gaussian matrix.
DensityMatrix random_density(Eigen::Index dim, Rng& rng);

/// Ensemble of normalized Gaussian vectors with simplex-uniform weights.
Source random_source(Eigen::Index dim, std::size_t n_states, Rng& rng);

} // namespace qshannon
