#include <algorithm>

#include "doctest.h"

#include "qshannon/channels.hpp"
#include "qshannon/info.hpp"
#include "qshannon/states.hpp"
#include "test_helpers.hpp"

using namespace qshannon;
using namespace qshannon::test;

namespace {

Source uniform_orthogonal_qubit() {
  Eigen::VectorXd p(2);
  p << 0.5, 0.5;
  return Source({ket0(), ket1()}, p);
}

Source nonorthogonal_qubit() {
  Eigen::VectorXd p(2);
  p << 0.5, 0.5;
  return Source({ket0(), ket_plus()}, p);
}

} // namespace

TEST_CASE("density_of_source on pinned ensembles") {
  Eigen::VectorXd one(1);
  one << 1.0;
  const Source single({ket0()}, one);
  CHECK(max_abs_diff(density_of_source(single).matrix(), diag({1.0, 0.0})) < 1e-15);

  CHECK(max_abs_diff(density_of_source(uniform_orthogonal_qubit()).matrix(),
                     diag({0.5, 0.5})) < 1e-15);

  // Hand outer-product sum: 1/2 |0><0| + 1/2 |+><+|.
  const Matrix expected = mat2(0.75, 0.25, 0.25, 0.25);
  CHECK(max_abs_diff(density_of_source(nonorthogonal_qubit()).matrix(), expected) < 1e-15);
}

TEST_CASE("source validation names the failing invariant") {
  Eigen::VectorXd p(2);
  p << 0.5, 0.6;
  CHECK_THROWS_WITH_AS((void)Source({ket0(), ket1()}, p),
                       doctest::Contains("probabilities sum to 1.1"),
                       ValidationError);

  Eigen::VectorXd q(1);
  q << 1.0;
  CHECK_THROWS_WITH_AS((void)Source({ket({0.5, 0.5})}, q),
                       doctest::Contains("norm"), ValidationError);

  Eigen::VectorXd r(2);
  r << 1.5, -0.5;
  CHECK_THROWS_WITH_AS((void)Source({ket0(), ket1()}, r),
                       doctest::Contains("negative"), ValidationError);
}

TEST_CASE("purify produces the expected reduced states") {
  Eigen::VectorXd one(1);
  one << 1.0;
  const Source single({ket_plus()}, one);
  const Purification pure = purify(single);
  CHECK(pure.ref_dim == 1);
  CHECK(pure.sys_dim == 2);
  CHECK(std::abs(pure.vector.norm() - 1.0) < 1e-12);
  const Matrix reduced = partial_trace(pure.vector * pure.vector.adjoint(), 1, 2,
                                       Keep::right);
  CHECK(spectral_log2_weighted(reduced) < 1e-12); // reduction stays pure

  const Purification bell = purify(uniform_orthogonal_qubit());
  const Matrix sys = partial_trace(bell.vector * bell.vector.adjoint(), 2, 2,
                                   Keep::right);
  CHECK(max_abs_diff(sys, diag({0.5, 0.5})) < 1e-12);

  const Source s = nonorthogonal_qubit();
  const Purification pur = purify(s);
  const Matrix reduced_sys = partial_trace(pur.vector * pur.vector.adjoint(),
                                           pur.ref_dim, pur.sys_dim, Keep::right);
  CHECK(max_abs_diff(reduced_sys, mat2(0.75, 0.25, 0.25, 0.25)) < 1e-10);
}

TEST_CASE("reference_state matches the purification reduction in entropy") {
  CHECK(max_abs_diff(reference_state(uniform_orthogonal_qubit()).matrix(),
                     diag({0.5, 0.5})) < 1e-15);

  Eigen::VectorXd one(1);
  one << 1.0;
  const Source single({ket_plus()}, one);
  CHECK(std::abs(reference_state(single).matrix()(0, 0).real() - 1.0) < 1e-12);

  const Source s = nonorthogonal_qubit();
  const double s_ref = von_neumann_entropy(reference_state(s));
  const double s_rho = von_neumann_entropy(density_of_source(s));
  CHECK(s_ref == doctest::Approx(s_rho).epsilon(1e-8));
}

TEST_CASE("reference and source entropies agree for random ensembles") {
  Rng rng = make_rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index d = 2 + (trial % 3);
    const Source s = random_source(d, 1 + (trial % 4), rng);
    CHECK(von_neumann_entropy(reference_state(s)) ==
          doctest::Approx(von_neumann_entropy(density_of_source(s))).epsilon(1e-8));
    const Purification pur = purify(s);
    const Matrix reduced = partial_trace(pur.vector * pur.vector.adjoint(),
                                         pur.ref_dim, pur.sys_dim, Keep::right);
    CHECK(max_abs_diff(reduced, density_of_source(s).matrix()) < 1e-9);
  }
}

TEST_CASE("permuting source items leaves scalar quantities unchanged") {
  Rng rng = make_rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d = 2 + (trial % 2);
    const Source s = random_source(d, 3, rng);
    std::vector<Vector> shuffled_states = {s.states()[2], s.states()[0],
                                           s.states()[1]};
    Eigen::VectorXd shuffled_probs(3);
    shuffled_probs << s.probs()[2], s.probs()[0], s.probs()[1];
    const Source t(shuffled_states, shuffled_probs);

    const KrausChannel c = random_channel(d, d, 3, rng);
    CHECK(von_neumann_entropy(density_of_source(t)) ==
          doctest::Approx(von_neumann_entropy(density_of_source(s))).epsilon(1e-9));
    CHECK(entanglement_fidelity(t, c) ==
          doctest::Approx(entanglement_fidelity(s, c)).epsilon(1e-9));
    CHECK(coherent_information(t, c).coherent_information ==
          doctest::Approx(coherent_information(s, c).coherent_information)
              .epsilon(1e-9));
  }
}

TEST_CASE("random_density construction guarantees") {
  Rng rng = make_rng(42);
  const DensityMatrix scalar = random_density(1, rng);
  CHECK(std::abs(scalar.matrix()(0, 0).real() - 1.0) < 1e-15);

  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_density(2 + (trial % 3), rng);
    CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);
    const Spectrum s = hermitian_eig(rho.matrix());
    CHECK(s.eigenvalues.minCoeff() > -1e-14);
  }

  Rng a = make_rng(42);
  Rng b = make_rng(42);
  CHECK(max_abs_diff(random_density(2, a).matrix(), random_density(2, b).matrix()) == 0.0);
}

TEST_CASE("random_source construction guarantees") {
  Rng rng = make_rng(43);
  const Source single = random_source(3, 1, rng);
  CHECK(single.probs()[0] == 1.0);

  const Source s = random_source(4, 3, rng);
  for (const Vector& v : s.states()) {
    CHECK(std::abs(v.norm() - 1.0) < 1e-12);
  }

  Rng a = make_rng(43);
  Rng b = make_rng(43);
  const Source s1 = random_source(3, 2, a);
  const Source s2 = random_source(3, 2, b);
  CHECK((s1.probs() - s2.probs()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((s1.states()[0] - s2.states()[0]).norm() == 0.0);
}

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS((void)DensityMatrix(mat2(1.0, 0.2, 0.0, 0.0)), ValidationError);
  CHECK_THROWS_AS((void)DensityMatrix(diag({0.7, 0.7})), ValidationError);
  CHECK_THROWS_AS((void)DensityMatrix(diag({1.5, -0.5})), ValidationError);
  CHECK_NOTHROW((void)DensityMatrix(diag({0.25, 0.75})));
}
