#include "qshannon/random.hpp"

#include <Eigen/QR>

namespace qshannon {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Matrix random_complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

Matrix random_unitary(Eigen::Index dim, Rng& rng) {
  const Matrix g = random_complex_gaussian(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  // Fix the phase freedom so the result is a pure function of the input.
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) {
      q.col(j) *= d / std::abs(d);
    }
  }
  return q;
}

Eigen::VectorXd random_simplex_point(Eigen::Index n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  Eigen::VectorXd p(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    p[i] = expo(rng);
  }
  return p / p.sum();
}

} // namespace qshannon
