#include "doctest.h"

#include "qshannon/tensor_linalg.hpp"
#include "test_helpers.hpp"

using namespace qshannon;
using namespace qshannon::test;

TEST_CASE("kron identity and basis bookkeeping") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK(max_abs_diff(kron(i2, i2), Matrix::Identity(4, 4)) == 0.0);

  const Matrix lhs = kron(diag({1.0, 0.0}), diag({0.0, 1.0}));
  CHECK(max_abs_diff(lhs, diag({0.0, 1.0, 0.0, 0.0})) == 0.0);
}

TEST_CASE("kron of bit flips maps |00> to |11>") {
  // Hand-multiplied 4x4 oracle.
  Matrix xx = Matrix::Zero(4, 4);
  xx(0, 3) = 1.0;
  xx(1, 2) = 1.0;
  xx(2, 1) = 1.0;
  xx(3, 0) = 1.0;
  CHECK(max_abs_diff(kron(pauli_x(), pauli_x()), xx) == 0.0);

  const Vector ket00 = kron(ket0(), ket0());
  const Vector ket11 = kron(ket1(), ket1());
  CHECK((Matrix(kron(pauli_x(), pauli_x())) * ket00 - ket11).norm() == 0.0);
}

TEST_CASE("kron dimension law and size cap") {
  Rng rng = make_rng(5);
  const Matrix a = random_complex_gaussian(3, 2, rng);
  const Matrix b = random_complex_gaussian(4, 5, rng);
  const Matrix c = kron(a, b);
  CHECK(c.rows() == 12);
  CHECK(c.cols() == 10);

  const Matrix big = Matrix::Identity(70, 70);
  CHECK_THROWS_AS((void)kron(big, big), DimensionError); // 4900 > 4096
  CHECK_NOTHROW((void)kron(big, big, 4900));
}

TEST_CASE("kron is associative within floating tolerance") {
  Rng rng = make_rng(6);
  const Matrix a = random_complex_gaussian(2, 2, rng);
  const Matrix b = random_complex_gaussian(3, 3, rng);
  const Matrix c = random_complex_gaussian(2, 2, rng);
  CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
}

TEST_CASE("partial trace of the Bell state") {
  Vector bell = Vector::Zero(4);
  bell[0] = 1.0 / std::sqrt(2.0);
  bell[3] = 1.0 / std::sqrt(2.0);
  const Matrix rho = bell * bell.adjoint();
  CHECK(max_abs_diff(partial_trace(rho, 2, 2, Keep::left), 0.5 * Matrix::Identity(2, 2)) < 1e-15);
  CHECK(max_abs_diff(partial_trace(rho, 2, 2, Keep::right), 0.5 * Matrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("partial trace factorizes product states") {
  Rng rng = make_rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix g1 = random_complex_gaussian(3, 3, rng);
    const Matrix g2 = random_complex_gaussian(3, 3, rng);
    Matrix rho = g1 * g1.adjoint();
    rho /= rho.trace().real();
    Matrix sigma = g2 * g2.adjoint();
    sigma /= sigma.trace().real();
    CHECK(max_abs_diff(partial_trace(kron(rho, sigma), 3, 3, Keep::left), rho) < 1e-12);
    CHECK(max_abs_diff(partial_trace(kron(rho, sigma), 3, 3, Keep::right), sigma) < 1e-12);
  }
}

TEST_CASE("partial trace preserves trace and positivity on random input") {
  Rng rng = make_rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index dl = 2 + (trial % 3);
    const Eigen::Index dr = 2 + ((trial / 3) % 3);
    const Matrix h = random_hermitian(dl * dr, rng);
    const Matrix kept = partial_trace(h, dl, dr, Keep::left);
    // Direct-summation oracle for the trace.
    Complex direct(0.0, 0.0);
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
      direct += h(i, i);
    }
    CHECK(std::abs(kept.trace() - direct) < 1e-10);

    const Matrix g = random_complex_gaussian(dl * dr, dl * dr, rng);
    Matrix psd = g * g.adjoint();
    psd /= psd.trace().real();
    const Spectrum s = hermitian_eig(partial_trace(psd, dl, dr, Keep::right));
    CHECK(s.eigenvalues.minCoeff() > -kPositivityTol);
  }
}

TEST_CASE("partial trace rejects mismatched factorizations") {
  const Matrix m = Matrix::Identity(6, 6);
  CHECK_THROWS_AS((void)partial_trace(m, 2, 2, Keep::left), DimensionError);
  CHECK_THROWS_AS((void)partial_trace(Matrix::Zero(4, 6), 2, 2, Keep::left),
                  DimensionError);
}

TEST_CASE("hermitian_eig on already diagonal input") {
  const Spectrum s = hermitian_eig(diag({3.0, 1.0}));
  CHECK(s.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(max_abs_diff(s.eigenvectors.cwiseAbs(), Matrix::Identity(2, 2)) < 1e-14);
}

TEST_CASE("hermitian_eig of a rank-1 projector") {
  const Matrix m = mat2(0.5, 0.5, 0.5, 0.5);
  const Spectrum s = hermitian_eig(m);
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(s.eigenvalues[1]) < 1e-14);
}

TEST_CASE("hermitian_eig reconstruction and orthonormality") {
  Rng rng = make_rng(9);
  for (const Eigen::Index dim : {8, 16, 64}) {
    const Matrix h = random_hermitian(dim, rng);
    const Spectrum s = hermitian_eig(h);
    const Matrix rebuilt = s.eigenvectors *
                           s.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
                           s.eigenvectors.adjoint();
    CHECK((rebuilt - h).norm() / h.norm() < 1e-9);
    CHECK(max_abs_diff(s.eigenvectors.adjoint() * s.eigenvectors,
                       Matrix::Identity(dim, dim)) < 1e-9);
    for (Eigen::Index i = 1; i < dim; ++i) {
      CHECK(s.eigenvalues[i - 1] >= s.eigenvalues[i]);
    }
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  CHECK_THROWS_AS((void)hermitian_eig(mat2(1.0, 1.0, 0.0, 1.0)), ValidationError);
  // A tiny asymmetry is symmetrized away instead.
  Matrix m = diag({0.7, 0.3});
  m(0, 1) = Complex(1e-13, 0.0);
  CHECK_NOTHROW((void)hermitian_eig(m));
}

TEST_CASE("spectral_log2_weighted on pinned spectra") {
  CHECK(spectral_log2_weighted(diag({1.0, 0.0})) == 0.0);
  CHECK(spectral_log2_weighted(diag({0.5, 0.5})) == doctest::Approx(1.0).epsilon(1e-14));
  // High-precision scalar oracle for -sum lambda log2 lambda.
  CHECK(spectral_log2_weighted(diag({0.25, 0.75})) ==
        doctest::Approx(0.81127812445913286).epsilon(1e-12));
}

TEST_CASE("spectral_log2_weighted validates its input") {
  CHECK_THROWS_AS((void)spectral_log2_weighted(diag({0.9, 0.2})), ValidationError);
  CHECK_THROWS_AS((void)spectral_log2_weighted(diag({1.1, -0.1})), ValidationError);
}

TEST_CASE("entropy weight is unitarily invariant") {
  Rng rng = make_rng(10);
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::Index dim = 2 + (trial % 4);
    const Matrix g = random_complex_gaussian(dim, dim, rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    const Matrix u = random_unitary(dim, rng);
    CHECK(spectral_log2_weighted(u * rho * u.adjoint()) ==
          doctest::Approx(spectral_log2_weighted(rho)).epsilon(1e-9));
  }
}
