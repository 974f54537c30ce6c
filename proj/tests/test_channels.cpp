#include <cmath>

#include "doctest.h"

#include "qshannon/channels.hpp"
#include "qshannon/info.hpp"
#include "test_helpers.hpp"

using namespace qshannon;
using namespace qshannon::test;

namespace {

// n-fold product ensemble of a qubit eigen-ensemble {p0:|0>, p1:|1>}.
Source block_basis_source(double p0, int n) {
  std::vector<Vector> states;
  Eigen::VectorXd probs(1 << n);
  for (int m = 0; m < (1 << n); ++m) {
    Vector v = Vector::Zero(1 << n);
    v[m] = Complex(1.0, 0.0);
    states.push_back(v);
    double p = 1.0;
    for (int b = n - 1; b >= 0; --b) {
      p *= ((m >> b) & 1) ? (1.0 - p0) : p0;
    }
    probs[m] = p;
  }
  return Source(std::move(states), std::move(probs));
}

} // namespace

TEST_CASE("validate_kraus_set certifies and rejects") {
  const ValidationReport id_report = validate_kraus_set({Matrix::Identity(2, 2)});
  CHECK(id_report.trace_preserving);
  CHECK(id_report.unital);
  CHECK(id_report.trace_residual < 1e-15);

  const KrausChannel deph = dephasing_channel(2);
  const ValidationReport deph_report = validate(deph);
  CHECK(deph_report.trace_preserving);
  CHECK(deph_report.unital);
  CHECK(deph.unital());

  // {I/2} alone misses the completeness sum by 3/4.
  const ValidationReport broken = validate_kraus_set({0.5 * Matrix::Identity(2, 2)});
  CHECK_FALSE(broken.trace_preserving);
  CHECK(broken.trace_residual == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS((void)KrausChannel({0.5 * Matrix::Identity(2, 2)}), ValidationError);
}

TEST_CASE("apply on pinned channels") {
  Rng rng = make_rng(31);
  const KrausChannel id = identity_channel(2);
  const DensityMatrix rho = random_density(2, rng);
  CHECK(max_abs_diff(apply(id, rho).matrix(), rho.matrix()) < 1e-15);

  // Hand Kraus-sum oracle: projectors keep the diagonal only.
  const DensityMatrix skewed(mat2(0.75, 0.25, 0.25, 0.25));
  CHECK(max_abs_diff(apply(dephasing_channel(2), skewed).matrix(),
                     diag({0.75, 0.25})) < 1e-15);

  const KrausChannel depol = depolarizing_channel(2, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix any = random_density(2, rng);
    CHECK(max_abs_diff(apply(depol, any).matrix(), 0.5 * Matrix::Identity(2, 2)) < 1e-12);
  }
}

TEST_CASE("apply preserves trace and positivity") {
  Rng rng = make_rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index d_in = 2 + (trial % 3);
    const Eigen::Index d_out = 2 + ((trial / 3) % 3);
    int k = 1 + (trial % 4);
    if (k * d_out < d_in) {
      k = static_cast<int>((d_in + d_out - 1) / d_out);
    }
    const KrausChannel c = random_channel(d_in, d_out, k, rng);
    const DensityMatrix rho = random_density(d_in, rng);
    const DensityMatrix out = apply(c, rho);
    CHECK(std::abs(out.matrix().trace().real() - 1.0) < 1e-9);
    CHECK(hermitian_eig(out.matrix()).eigenvalues.minCoeff() > -kPositivityTol);
  }
}

TEST_CASE("compose matches sequential application") {
  Rng rng = make_rng(33);
  const KrausChannel id = identity_channel(2);
  const KrausChannel c = random_channel(2, 2, 3, rng);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_density(2, rng);
    CHECK(max_abs_diff(apply(compose(id, c), rho).matrix(),
                       apply(c, rho).matrix()) < 1e-12);
  }

  // Dephasing twice acts exactly like dephasing once.
  const KrausChannel deph = dephasing_channel(2);
  const KrausChannel twice = compose(deph, deph);
  CHECK(twice.kraus().size() == 4);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = random_density(2, rng);
    CHECK(max_abs_diff(apply(twice, rho).matrix(),
                       apply(deph, apply(deph, rho)).matrix()) < 1e-13);
    CHECK(max_abs_diff(apply(twice, rho).matrix(), apply(deph, rho).matrix()) < 1e-13);
  }
}

TEST_CASE("compose is associative in action") {
  Rng rng = make_rng(34);
  const KrausChannel f = random_channel(2, 3, 2, rng);
  const KrausChannel g = random_channel(3, 2, 2, rng);
  const KrausChannel h = random_channel(2, 2, 2, rng);
  const KrausChannel left = compose(compose(h, g), f);
  const KrausChannel right = compose(h, compose(g, f));
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = random_density(2, rng);
    CHECK(max_abs_diff(apply(left, rho).matrix(), apply(right, rho).matrix()) < 1e-9);
  }
  CHECK_THROWS_AS((void)compose(f, f), DimensionError);
}

TEST_CASE("tensor_power factorizes on product states") {
  Rng rng = make_rng(35);
  const KrausChannel c = random_channel(2, 2, 2, rng);
  CHECK(tensor_power(c, 1).kraus().size() == c.kraus().size());

  const KrausChannel c2 = tensor_power(c, 2);
  CHECK(c2.kraus().size() == 4);
  const DensityMatrix rho = random_density(2, rng);
  const Matrix lhs = apply(c2, DensityMatrix(kron(rho.matrix(), rho.matrix()))).matrix();
  const Matrix single = apply(c, rho).matrix();
  CHECK(max_abs_diff(lhs, kron(single, single)) < 1e-12);

  CHECK_THROWS_AS((void)tensor_power(c, 3, 4096, 7), DimensionError);
  CHECK_THROWS_AS((void)tensor_power(random_channel(4, 4, 2, rng), 7), DimensionError);
}

TEST_CASE("extend_with_identity") {
  Rng rng = make_rng(36);
  const KrausChannel c = random_channel(2, 2, 3, rng);
  const KrausChannel trivial = extend_with_identity(c, 1);
  const DensityMatrix rho = random_density(2, rng);
  CHECK(max_abs_diff(apply(trivial, rho).matrix(), apply(c, rho).matrix()) < 1e-15);

  const KrausChannel ext = extend_with_identity(c, 3);
  const DensityMatrix ref = random_density(3, rng);
  const Matrix prod_in = kron(ref.matrix(), rho.matrix());
  const Matrix prod_out = apply(ext, DensityMatrix(prod_in)).matrix();
  CHECK(max_abs_diff(prod_out, kron(ref.matrix(), apply(c, rho).matrix())) < 1e-12);

  // Bell state through extended dephasing: hand 4x4 Kraus-sum oracle.
  Vector bell = Vector::Zero(4);
  bell[0] = 1.0 / std::sqrt(2.0);
  bell[3] = 1.0 / std::sqrt(2.0);
  const KrausChannel ext_deph = extend_with_identity(dephasing_channel(2), 2);
  const Matrix out = apply_to_matrix(ext_deph, bell * bell.adjoint());
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = 0.5;
  expected(3, 3) = 0.5;
  CHECK(max_abs_diff(out, expected) < 1e-15);
}

TEST_CASE("dephasing channel construction") {
  const KrausChannel deph = dephasing_channel(2);
  CHECK(max_abs_diff(apply_to_matrix(deph, mat2(0.5, 0.5, 0.5, 0.5)),
                     diag({0.5, 0.5})) < 1e-15);
  Rng rng = make_rng(37);
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::VectorXd p = random_simplex_point(3, rng);
    const Matrix fixed = Matrix(p.cast<Complex>().asDiagonal());
    CHECK(max_abs_diff(apply_to_matrix(dephasing_channel(3), fixed), fixed) < 1e-15);
  }
  CHECK_THROWS_AS((void)dephasing_channel(1), DimensionError);
}

TEST_CASE("depolarizing channel family") {
  Rng rng = make_rng(38);
  const KrausChannel none = depolarizing_channel(2, 0.0);
  const DensityMatrix rho = random_density(2, rng);
  CHECK(max_abs_diff(apply(none, rho).matrix(), rho.matrix()) < 1e-12);

  for (const Eigen::Index d : {2, 3}) {
    const KrausChannel full = depolarizing_channel(d, 1.0);
    CHECK(full.unital());
    const DensityMatrix any = random_density(d, rng);
    CHECK(max_abs_diff(apply(full, any).matrix(),
                       Matrix::Identity(d, d) / static_cast<double>(d)) < 1e-12);
  }

  // Convex-combination oracle at lambda = 1/2.
  const KrausChannel half = depolarizing_channel(2, 0.5);
  CHECK(max_abs_diff(apply(half, DensityMatrix(diag({1.0, 0.0}))).matrix(),
                     diag({0.75, 0.25})) < 1e-14);

  CHECK_THROWS_AS((void)depolarizing_channel(2, 1.5), DomainError);
  CHECK_THROWS_AS((void)depolarizing_channel(2, -0.1), DomainError);
}

TEST_CASE("random_channel is an exact isometry slice") {
  Rng rng = make_rng(39);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d_in = 2 + (trial % 3);
    const Eigen::Index d_out = 2 + ((trial / 2) % 3);
    int k = 1 + (trial % 4);
    if (k * d_out < d_in) {
      k = static_cast<int>((d_in + d_out - 1) / d_out);
    }
    const KrausChannel c = random_channel(d_in, d_out, k, rng);
    CHECK(validate(c).trace_residual < 1e-10);
  }

  // A single square Kraus operator is a unitary channel.
  const KrausChannel u = random_channel(3, 3, 1, rng);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho = random_density(3, rng);
    CHECK(von_neumann_entropy(apply(u, rho)) ==
          doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-9));
  }

  Rng a = make_rng(40);
  Rng b = make_rng(40);
  CHECK(max_abs_diff(random_channel(2, 2, 2, a).kraus()[1],
                     random_channel(2, 2, 2, b).kraus()[1]) == 0.0);

  CHECK_THROWS_AS((void)random_channel(5, 2, 2, rng), DimensionError);
}

TEST_CASE("random mixed-unitary channels are certified unital") {
  Rng rng = make_rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const KrausChannel c = random_mixed_unitary_channel(2 + (trial % 3), 1 + trial % 3, rng);
    CHECK(c.unital());
    CHECK(validate(c).unitality_residual < 1e-10);
  }
}

TEST_CASE("typical subspace code at full rate is lossless") {
  const DensityMatrix rho(diag({0.9, 0.1}));
  const TypicalSubspaceCode code = typical_subspace_encoder(rho, 2, 1.0);
  CHECK(code.code_dim == 4);
  CHECK(code.encoder.out_dim() == 4);
  const Source block = block_basis_source(0.9, 2);
  const double fe = entanglement_fidelity(block, compose(code.decoder, code.encoder));
  CHECK(fe == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("typical subspace code keeps pure sources perfect") {
  Eigen::VectorXd one(1);
  one << 1.0;
  const Source source({ket_plus()}, one);
  const DensityMatrix rho = density_of_source(source);
  for (const double rate : {0.0, 0.5}) {
    const TypicalSubspaceCode code = typical_subspace_encoder(rho, 2, rate);
    std::vector<Vector> states = {kron(ket_plus(), ket_plus())};
    const Source block(states, one);
    const double fe = entanglement_fidelity(block, compose(code.decoder, code.encoder));
    CHECK(fe == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("typical subspace code against the explicit purification oracle") {
  const DensityMatrix rho(diag({0.9, 0.1}));
  const TypicalSubspaceCode code = typical_subspace_encoder(rho, 3, 2.0 / 3.0);
  CHECK(code.code_dim == 4);
  CHECK(code.encoder.out_dim() == 4);
  CHECK(code.decoder.in_dim() == 4);
  CHECK_FALSE(code.encoder.unital());

  const KrausChannel composite = compose(code.decoder, code.encoder);
  const Source block = block_basis_source(0.9, 3);
  const double fe = entanglement_fidelity(block, composite);

  // Brute force: purify the 8-dimensional block state through its spectrum,
  // push the 64-dimensional projector through I (x) composite and take the
  // overlap.
  const Matrix block_rho = kron_power(rho.matrix(), 3);
  const Spectrum spec = hermitian_eig(block_rho);
  Vector psi = Vector::Zero(8 * 8);
  for (Eigen::Index i = 0; i < 8; ++i) {
    Vector basis = Vector::Zero(8);
    basis[i] = Complex(1.0, 0.0);
    psi += std::sqrt(std::max(spec.eigenvalues[i], 0.0)) *
           kron(basis, spec.eigenvectors.col(i));
  }
  Matrix extended_out = Matrix::Zero(64, 64);
  const Matrix id8 = Matrix::Identity(8, 8);
  for (const Matrix& a : composite.kraus()) {
    const Matrix lifted = kron(id8, a);
    extended_out += lifted * (psi * psi.adjoint()) * lifted.adjoint();
  }
  const double brute = std::real(psi.dot(extended_out * psi));
  CHECK(fe == doctest::Approx(brute).epsilon(1e-10));

  // For a diagonal block state the fidelity is the squared kept mass:
  // (0.729 + 3*0.081)^2.
  CHECK(fe == doctest::Approx(0.944784).epsilon(1e-12));

  // Weak-converse arithmetic for this report.
  const double delta = 0.46899559358928122 - std::log2(4.0) / 3.0;
  const double rhs = ((1.0 - fe) * std::log2(63.0) + binary_entropy(fe)) / 3.0;
  CHECK(delta <= rhs);
}

TEST_CASE("typical subspace encoder rejects oversized rates") {
  const DensityMatrix rho(diag({0.9, 0.1}));
  CHECK_THROWS_AS((void)typical_subspace_encoder(rho, 2, 1.5), DomainError);
  CHECK_THROWS_AS((void)typical_subspace_encoder(rho, 1, -0.25), DomainError);
}
