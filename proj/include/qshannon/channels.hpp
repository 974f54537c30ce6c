#pragma once

// Kraus-operator quantum evolutions: validation, application, composition,
// tensor powers, reference extension, standard families and a typical
// subspace block code.

#include <vector>

#include "qshannon/random.hpp"
#include "qshannon/states.hpp"
#include "qshannon/tensor_linalg.hpp"

namespace qshannon {

/// Completeness-sum residuals for a Kraus set. trace_residual is the
/// max-norm of sum A^dagger A - I(in); unitality_residual the max-norm of
/// sum A A^dagger - I(out). unital requires a square channel.
struct ValidationReport {
  double trace_residual = 0.0;
  double unitality_residual = 0.0;
  bool trace_preserving = false;
  bool unital = false;
};

/// Residuals and flags for an arbitrary Kraus set; never throws.
ValidationReport validate_kraus_set(const std::vector<Matrix>& ops);

/// Trace-preserving quantum evolution in Kraus form, acting as
/// rho -> sum_mu A_mu rho A_mu^dagger. The constructor rejects sets whose
/// trace-preservation residual exceeds kCptpTol and certifies unitality
/// (never asserts it).
class KrausChannel {
public:
  explicit KrausChannel(std::vector<Matrix> ops);

  const std::vector<Matrix>& kraus() const { return ops_; }
  Eigen::Index in_dim() const { return in_dim_; }
  Eigen::Index out_dim() const { return out_dim_; }
  bool unital() const { return unital_; }

private:
  std::vector<Matrix> ops_;
  Eigen::Index in_dim_ = 0;
  Eigen::Index out_dim_ = 0;
  bool unital_ = false;
};

/// Recompute the validation report for an already constructed channel.
ValidationReport validate(const KrausChannel& c);

/// Kraus sum applied to an arbitrary (not necessarily Hermitian) matrix.
Matrix apply_to_matrix(const KrausChannel& c, const Matrix& x);

/// Channel action on a density matrix; trace preserved.
DensityMatrix apply(const KrausChannel& c, const DensityMatrix& rho);

/// Composite channel acting as second after first; Kraus set is all
/// products {B_nu A_mu}.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first,
                     Eigen::Index max_kraus = kDefaultMaxKraus);

/// Memoryless n-fold block channel; Kraus set is all n-fold Kronecker
/// products.
KrausChannel tensor_power(const KrausChannel& c, int n,
                          Eigen::Index max_dim = kDefaultMaxDim,
                          Eigen::Index max_kraus = kDefaultMaxKraus);

/// {I_ref (x) A_mu}: acts as the identity on a ref_dim-dimensional left
/// factor and as c on the right factor.
KrausChannel extend_with_identity(const KrausChannel& c, Eigen::Index ref_dim,
                                  Eigen::Index max_dim = kDefaultMaxDim);

KrausChannel identity_channel(Eigen::Index dim);

/// Projectors onto the computational basis; kills all off-diagonal entries.
KrausChannel dephasing_channel(Eigen::Index dim);

/// rho -> (1-lambda) rho + lambda I/d, realized by an explicit
/// Heisenberg-Weyl Kraus set. Unital for every lambda in [0,1].
KrausChannel depolarizing_channel(Eigen::Index dim, double lambda);

/// Channel sampled by orthonormalizing a Gaussian (kraus_count*d_out) x d_in
/// matrix and slicing into Kraus blocks. Always trace preserving; requires
/// kraus_count*d_out >= d_in.
KrausChannel random_channel(Eigen::Index d_in, Eigen::Index d_out,
                            int kraus_count, Rng& rng);

/// Random convex mixture of random unitaries; unital and trace preserving.
KrausChannel random_mixed_unitary_channel(Eigen::Index dim, int unitary_count,
                                          Rng& rng);

/// Block compression code built from the dominant eigenvectors of the n-fold
/// product state. The encoder maps the d^n block space onto a code space of
/// dimension floor(2^(n*rate)), routing the complement to the leading code
/// word; the decoder embeds the code space back isometrically. Encoder is
/// trace preserving but generally not unital.
struct TypicalSubspaceCode {
  KrausChannel encoder;
  KrausChannel decoder;
  Eigen::Index code_dim;
};

TypicalSubspaceCode typical_subspace_encoder(const DensityMatrix& rho,
                                             int block_length,
                                             double rate_bits_per_symbol,
                                             Eigen::Index max_dim = kDefaultMaxDim);

} // namespace qshannon
