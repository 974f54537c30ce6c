#include "qshannon/info.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qshannon {

double von_neumann_entropy(const DensityMatrix& rho) {
  return spectral_log2_weighted(rho.matrix());
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("binary_entropy: argument " + std::to_string(x) +
                      " outside [0, 1]");
  }
  double h = 0.0;
  if (x > 0.0) {
    h -= x * std::log2(x);
  }
  if (x < 1.0) {
    h -= (1.0 - x) * std::log2(1.0 - x);
  }
  return h;
}

std::optional<double> relative_entropy(const DensityMatrix& rho1,
                                       const DensityMatrix& rho2) {
  if (rho1.dim() != rho2.dim()) {
    throw DimensionError("relative_entropy: dimensions " +
                         std::to_string(rho1.dim()) + " and " +
                         std::to_string(rho2.dim()) + " differ");
  }
  // tr(rho1 log2 rho1) from the spectrum of rho1.
  const Spectrum s1 = hermitian_eig(rho1.matrix());
  double term1 = 0.0;
  for (Eigen::Index i = 0; i < s1.eigenvalues.size(); ++i) {
    const double lambda = std::max(s1.eigenvalues[i], 0.0);
    if (lambda > kEigCutoff) {
      term1 += lambda * std::log2(lambda);
    }
  }
  // tr(rho1 log2 rho2) in the eigenbasis of rho2. Directions outside the
  // support of rho2 carrying rho1 mass make the divergence infinite.
  const Spectrum s2 = hermitian_eig(rho2.matrix());
  double term2 = 0.0;
  for (Eigen::Index j = 0; j < s2.eigenvalues.size(); ++j) {
    const Vector w = s2.eigenvectors.col(j);
    const double mass = std::real(w.dot(rho1.matrix() * w));
    if (s2.eigenvalues[j] <= kEigCutoff) {
      if (mass > kEigCutoff) {
        return std::nullopt;
      }
      continue;
    }
    term2 += mass * std::log2(s2.eigenvalues[j]);
  }
  return term1 - term2;
}

DensityMatrix extended_channel_output(const Source& s, const KrausChannel& c) {
  if (c.in_dim() != s.dim()) {
    throw DimensionError("channel input dimension " +
                         std::to_string(c.in_dim()) +
                         " does not match source dimension " +
                         std::to_string(s.dim()));
  }
  const Purification pur = purify(s);
  const KrausChannel extended = extend_with_identity(c, pur.ref_dim);
  const Matrix projector = pur.vector * pur.vector.adjoint();
  return DensityMatrix(apply_to_matrix(extended, projector));
}

double entropy_exchange(const Source& s, const KrausChannel& c) {
  return von_neumann_entropy(extended_channel_output(s, c));
}

CoherentInfoBreakdown coherent_information(const Source& s,
                                           const KrausChannel& c) {
  CoherentInfoBreakdown b;
  b.output_entropy = von_neumann_entropy(apply(c, density_of_source(s)));
  b.entropy_exchange = entropy_exchange(s, c);
  b.coherent_information = b.output_entropy - b.entropy_exchange;
  return b;
}

EntanglementFidelityForms entanglement_fidelity_forms(const Source& s,
                                                      const KrausChannel& c) {
  if (c.in_dim() != c.out_dim() || c.in_dim() != s.dim()) {
    throw DimensionError(
        "entanglement_fidelity: channel must map the source space to itself");
  }
  EntanglementFidelityForms forms;

  // Purification overlap <psi_R| (I (x) S)(|psi_R><psi_R|) |psi_R>.
  const Purification pur = purify(s);
  const Matrix out = extended_channel_output(s, c).matrix();
  forms.purification_form = std::real(pur.vector.dot(out * pur.vector));

  // Ensemble double sum over p_i p_j <psi_i| S(|psi_i><psi_j|) |psi_j>.
  // Each term factorizes through c_{i,mu} = <psi_i| A_mu |psi_i>.
  const Eigen::Index n = static_cast<Eigen::Index>(s.size());
  const Eigen::Index k = static_cast<Eigen::Index>(c.kraus().size());
  Matrix coeff(n, k);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index mu = 0; mu < k; ++mu) {
      coeff(i, mu) = s.states()[i].dot(c.kraus()[mu] * s.states()[i]);
    }
  }
  Complex acc(0.0, 0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Complex term(0.0, 0.0);
      for (Eigen::Index mu = 0; mu < k; ++mu) {
        term += coeff(i, mu) * std::conj(coeff(j, mu));
      }
      acc += s.probs()[i] * s.probs()[j] * term;
    }
  }
  forms.ensemble_form = acc.real();
  return forms;
}

double entanglement_fidelity(const Source& s, const KrausChannel& c) {
  const EntanglementFidelityForms forms = entanglement_fidelity_forms(s, c);
  const double disagreement =
      std::abs(forms.purification_form - forms.ensemble_form);
  if (disagreement > kFidelityFormTol) {
    throw ConsistencyError(
        "entanglement_fidelity: purification and ensemble forms disagree by " +
        std::to_string(disagreement));
  }
  return std::clamp(forms.purification_form, 0.0, 1.0);
}

double average_fidelity(const Source& s, const KrausChannel& c) {
  if (c.in_dim() != c.out_dim() || c.in_dim() != s.dim()) {
    throw DimensionError(
        "average_fidelity: channel must map the source space to itself");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Vector& psi = s.states()[i];
    const Matrix image = apply_to_matrix(c, psi * psi.adjoint());
    acc += s.probs()[i] * std::real(psi.dot(image * psi));
  }
  return std::clamp(acc, 0.0, 1.0);
}

FidelityPair fidelity_pair(const Source& s, const KrausChannel& c) {
  FidelityPair pair;
  pair.entanglement_fidelity = entanglement_fidelity(s, c);
  pair.average_fidelity = average_fidelity(s, c);
  if (pair.average_fidelity < pair.entanglement_fidelity - kFidelityFormTol) {
    throw ConsistencyError(
        "fidelity_pair: average fidelity " +
        std::to_string(pair.average_fidelity) +
        " fell below the entanglement fidelity " +
        std::to_string(pair.entanglement_fidelity));
  }
  return pair;
}

double fano_bound(double entanglement_fidelity, Eigen::Index dim) {
  if (dim < 2) {
    throw DomainError("fano_bound: output dimension must be >= 2");
  }
  if (!(entanglement_fidelity >= 0.0 && entanglement_fidelity <= 1.0)) {
    throw DomainError("fano_bound: fidelity " +
                      std::to_string(entanglement_fidelity) +
                      " outside [0, 1]");
  }
  const double d = static_cast<double>(dim);
  return (1.0 - entanglement_fidelity) * std::log2(d * d - 1.0) +
         binary_entropy(entanglement_fidelity);
}

} // namespace qshannon
