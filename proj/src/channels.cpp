#include "qshannon/channels.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include <Eigen/QR>

namespace qshannon {

namespace {

Eigen::Index ipow_checked(Eigen::Index base, int exp, Eigen::Index cap,
                          const char* what) {
  Eigen::Index out = 1;
  for (int k = 0; k < exp; ++k) {
    out *= base;
    if (out > cap) {
      throw DimensionError(std::string(what) + ": dimension " +
                           std::to_string(base) + "^" + std::to_string(exp) +
                           " exceeds the cap " + std::to_string(cap));
    }
  }
  return out;
}

} // namespace

ValidationReport validate_kraus_set(const std::vector<Matrix>& ops) {
  if (ops.empty()) {
    throw ValidationError("validate_kraus_set: empty Kraus set");
  }
  const Eigen::Index out_dim = ops.front().rows();
  const Eigen::Index in_dim = ops.front().cols();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].rows() != out_dim || ops[i].cols() != in_dim) {
      throw DimensionError("validate_kraus_set: operator " + std::to_string(i) +
                           " is " + std::to_string(ops[i].rows()) + "x" +
                           std::to_string(ops[i].cols()) + ", expected " +
                           std::to_string(out_dim) + "x" + std::to_string(in_dim));
    }
  }
  Matrix tp_sum = Matrix::Zero(in_dim, in_dim);
  Matrix un_sum = Matrix::Zero(out_dim, out_dim);
  for (const Matrix& a : ops) {
    tp_sum += a.adjoint() * a;
    un_sum += a * a.adjoint();
  }
  ValidationReport report;
  report.trace_residual =
      (tp_sum - Matrix::Identity(in_dim, in_dim)).cwiseAbs().maxCoeff();
  report.unitality_residual =
      (un_sum - Matrix::Identity(out_dim, out_dim)).cwiseAbs().maxCoeff();
  report.trace_preserving = report.trace_residual <= kCptpTol;
  report.unital = in_dim == out_dim && report.unitality_residual <= kCptpTol;
  return report;
}

KrausChannel::KrausChannel(std::vector<Matrix> ops) : ops_(std::move(ops)) {
  const ValidationReport report = validate_kraus_set(ops_);
  if (!report.trace_preserving) {
    throw ValidationError("KrausChannel: not trace preserving (residual " +
                          std::to_string(report.trace_residual) + ")");
  }
  out_dim_ = ops_.front().rows();
  in_dim_ = ops_.front().cols();
  unital_ = report.unital;
}

ValidationReport validate(const KrausChannel& c) {
  return validate_kraus_set(c.kraus());
}

Matrix apply_to_matrix(const KrausChannel& c, const Matrix& x) {
  if (x.rows() != c.in_dim() || x.cols() != c.in_dim()) {
    throw DimensionError("apply: matrix is " + std::to_string(x.rows()) + "x" +
                         std::to_string(x.cols()) + ", channel input is " +
                         std::to_string(c.in_dim()));
  }
  Matrix out = Matrix::Zero(c.out_dim(), c.out_dim());
  for (const Matrix& a : c.kraus()) {
    out += a * x * a.adjoint();
  }
  return out;
}

DensityMatrix apply(const KrausChannel& c, const DensityMatrix& rho) {
  return DensityMatrix(apply_to_matrix(c, rho.matrix()));
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first,
                     Eigen::Index max_kraus) {
  if (first.out_dim() != second.in_dim()) {
    throw DimensionError("compose: first output " +
                         std::to_string(first.out_dim()) +
                         " does not match second input " +
                         std::to_string(second.in_dim()));
  }
  const Eigen::Index count =
      static_cast<Eigen::Index>(first.kraus().size()) *
      static_cast<Eigen::Index>(second.kraus().size());
  if (count > max_kraus) {
    throw DimensionError("compose: Kraus set of " + std::to_string(count) +
                         " operators exceeds the cap " + std::to_string(max_kraus));
  }
  std::vector<Matrix> ops;
  ops.reserve(static_cast<std::size_t>(count));
  for (const Matrix& b : second.kraus()) {
    for (const Matrix& a : first.kraus()) {
      ops.push_back(b * a);
    }
  }
  return KrausChannel(std::move(ops));
}

KrausChannel tensor_power(const KrausChannel& c, int n, Eigen::Index max_dim,
                          Eigen::Index max_kraus) {
  if (n < 1) {
    throw DomainError("tensor_power: block length must be >= 1");
  }
  ipow_checked(c.in_dim(), n, max_dim, "tensor_power input");
  ipow_checked(c.out_dim(), n, max_dim, "tensor_power output");
  ipow_checked(static_cast<Eigen::Index>(c.kraus().size()), n, max_kraus,
               "tensor_power Kraus count");
  std::vector<Matrix> ops = c.kraus();
  for (int k = 1; k < n; ++k) {
    std::vector<Matrix> next;
    next.reserve(ops.size() * c.kraus().size());
    for (const Matrix& a : ops) {
      for (const Matrix& b : c.kraus()) {
        next.push_back(kron(a, b, max_dim));
      }
    }
    ops = std::move(next);
  }
  return KrausChannel(std::move(ops));
}

KrausChannel extend_with_identity(const KrausChannel& c, Eigen::Index ref_dim,
                                  Eigen::Index max_dim) {
  if (ref_dim < 1) {
    throw DimensionError("extend_with_identity: reference dimension must be >= 1");
  }
  const Matrix id = Matrix::Identity(ref_dim, ref_dim);
  std::vector<Matrix> ops;
  ops.reserve(c.kraus().size());
  for (const Matrix& a : c.kraus()) {
    ops.push_back(kron(id, a, max_dim));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel identity_channel(Eigen::Index dim) {
  if (dim < 1) {
    throw DimensionError("identity_channel: dimension must be >= 1");
  }
  return KrausChannel({Matrix::Identity(dim, dim)});
}

KrausChannel dephasing_channel(Eigen::Index dim) {
  if (dim < 2) {
    throw DimensionError("dephasing_channel: dimension must be >= 2");
  }
  std::vector<Matrix> ops;
  ops.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index mu = 0; mu < dim; ++mu) {
    Matrix p = Matrix::Zero(dim, dim);
    p(mu, mu) = Complex(1.0, 0.0);
    ops.push_back(std::move(p));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel depolarizing_channel(Eigen::Index dim, double lambda) {
  if (dim < 2) {
    throw DimensionError("depolarizing_channel: dimension must be >= 2");
  }
  if (lambda < 0.0 || lambda > 1.0) {
    throw DomainError("depolarizing_channel: noise weight " +
                      std::to_string(lambda) + " outside [0, 1]");
  }
  const double d = static_cast<double>(dim);
  // Heisenberg-Weyl twirl: the identity keeps weight 1 - lambda + lambda/d^2,
  // every other shift/clock product gets lambda/d^2.
  const double w_id = 1.0 - lambda + lambda / (d * d);
  const double w_rest = lambda / (d * d);

  Matrix shift = Matrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    shift((k + 1) % dim, k) = Complex(1.0, 0.0);
  }
  Matrix clock = Matrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / d;
    clock(k, k) = Complex(std::cos(angle), std::sin(angle));
  }

  std::vector<Matrix> ops;
  Matrix xa = Matrix::Identity(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    Matrix w = xa;
    for (Eigen::Index b = 0; b < dim; ++b) {
      const double weight = (a == 0 && b == 0) ? w_id : w_rest;
      if (weight > 0.0) {
        ops.push_back(std::sqrt(weight) * w);
      }
      w = w * clock;
    }
    xa = shift * xa;
  }
  return KrausChannel(std::move(ops));
}

KrausChannel random_channel(Eigen::Index d_in, Eigen::Index d_out,
                            int kraus_count, Rng& rng) {
  if (d_in < 1 || d_out < 1 || kraus_count < 1) {
    throw DimensionError("random_channel: dimensions and Kraus count must be >= 1");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(kraus_count) * d_out;
  if (rows < d_in) {
    throw DimensionError("random_channel: " + std::to_string(kraus_count) +
                         " operators of output dimension " +
                         std::to_string(d_out) +
                         " cannot carry an input of dimension " +
                         std::to_string(d_in));
  }
  const Matrix g = random_complex_gaussian(rows, d_in, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix isometry = qr.householderQ() * Matrix::Identity(rows, d_in);
  std::vector<Matrix> ops;
  ops.reserve(static_cast<std::size_t>(kraus_count));
  for (int k = 0; k < kraus_count; ++k) {
    ops.push_back(isometry.middleRows(static_cast<Eigen::Index>(k) * d_out, d_out));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel random_mixed_unitary_channel(Eigen::Index dim, int unitary_count,
                                          Rng& rng) {
  if (dim < 1 || unitary_count < 1) {
    throw DimensionError(
        "random_mixed_unitary_channel: dimension and count must be >= 1");
  }
  const Eigen::VectorXd weights =
      random_simplex_point(static_cast<Eigen::Index>(unitary_count), rng);
  std::vector<Matrix> ops;
  ops.reserve(static_cast<std::size_t>(unitary_count));
  for (int k = 0; k < unitary_count; ++k) {
    ops.push_back(std::sqrt(weights[k]) * random_unitary(dim, rng));
  }
  return KrausChannel(std::move(ops));
}

TypicalSubspaceCode typical_subspace_encoder(const DensityMatrix& rho,
                                             int block_length,
                                             double rate_bits_per_symbol,
                                             Eigen::Index max_dim) {
  if (block_length < 1) {
    throw DomainError("typical_subspace_encoder: block length must be >= 1");
  }
  if (rate_bits_per_symbol < 0.0) {
    throw DomainError("typical_subspace_encoder: rate must be >= 0");
  }
  const Eigen::Index d = rho.dim();
  const Eigen::Index block_dim =
      ipow_checked(d, block_length, max_dim, "typical_subspace_encoder block");
  const double total_bits = rate_bits_per_symbol * block_length;
  // Small nudges absorb the floating representation of rates like 2/3.
  if (std::exp2(std::ceil(total_bits - 1e-9)) >
      static_cast<double>(block_dim) * (1.0 + 1e-9)) {
    throw DomainError("typical_subspace_encoder: rate " +
                      std::to_string(rate_bits_per_symbol) +
                      " too large for a block of dimension " +
                      std::to_string(block_dim));
  }
  const Eigen::Index code_dim = std::min<Eigen::Index>(
      block_dim,
      static_cast<Eigen::Index>(std::floor(std::exp2(total_bits) + 1e-9)));

  const Matrix block = kron_power(rho.matrix(), block_length, max_dim);
  const Spectrum spectrum = hermitian_eig(block);

  // Dominant-eigenvector isometry; discarded directions all route to the
  // leading code word.
  const Matrix w = spectrum.eigenvectors.leftCols(code_dim);
  std::vector<Matrix> encoder_ops;
  encoder_ops.reserve(static_cast<std::size_t>(1 + block_dim - code_dim));
  encoder_ops.push_back(w.adjoint());
  Vector code_word = Vector::Zero(code_dim);
  code_word[0] = Complex(1.0, 0.0);
  for (Eigen::Index j = code_dim; j < block_dim; ++j) {
    encoder_ops.push_back(code_word * spectrum.eigenvectors.col(j).adjoint());
  }
  KrausChannel encoder(std::move(encoder_ops));
  KrausChannel decoder({w});
  return TypicalSubspaceCode{std::move(encoder), std::move(decoder), code_dim};
}

} // namespace qshannon
