#pragma once

// Scalar information quantities: entropies, relative entropy, entropy
// exchange, coherent information, both fidelities and the Fano bound.
// All logarithms are base 2; every result is in bits.

#include <optional>

#include "qshannon/channels.hpp"
#include "qshannon/states.hpp"

namespace qshannon {

/// Entanglement fidelity alongside the ensemble-averaged fidelity.
/// average_fidelity >= entanglement_fidelity always holds (up to 1e-9);
/// the two can differ because only the entanglement fidelity sees phase
/// distortion between ensemble members.
struct FidelityPair {
  double entanglement_fidelity = 0.0;
  double average_fidelity = 0.0;
};

/// Output entropy, entropy exchange and their difference. The coherent
/// information may be negative.
struct CoherentInfoBreakdown {
  double output_entropy = 0.0;
  double entropy_exchange = 0.0;
  double coherent_information = 0.0;
};

/// Both computation routes for the entanglement fidelity; they agree
/// analytically.
struct EntanglementFidelityForms {
  double purification_form = 0.0;
  double ensemble_form = 0.0;
};

/// S(rho) = -tr rho log2 rho, in [0, log2 d].
double von_neumann_entropy(const DensityMatrix& rho);

/// h(x) = -x log2 x - (1-x) log2(1-x) with h(0) = h(1) = 0.
double binary_entropy(double x);

/// S(rho1 || rho2) = tr(rho1 log2 rho1 - rho1 log2 rho2), evaluated through
/// the spectral decompositions of both arguments. Returns nullopt (the
/// distinguished +infinity) when the support of rho1 is not contained in
/// the support of rho2; support membership is decided at kEigCutoff.
std::optional<double> relative_entropy(const DensityMatrix& rho1,
                                       const DensityMatrix& rho2);

/// Channel output extended over the source purification:
/// (I_R (x) S)(|psi_R><psi_R|), a state on reference (x) output.
DensityMatrix extended_channel_output(const Source& s, const KrausChannel& c);

/// Entropy of the extended channel output.
double entropy_exchange(const Source& s, const KrausChannel& c);

/// Coherent information I = S(S rho) - entropy exchange, with the pieces.
CoherentInfoBreakdown coherent_information(const Source& s,
                                           const KrausChannel& c);

/// Purification-overlap and ensemble double-sum forms of the entanglement
/// fidelity, computed independently.
EntanglementFidelityForms entanglement_fidelity_forms(const Source& s,
                                                      const KrausChannel& c);

/// Entanglement fidelity. Computes both forms, cross-checks them within
/// kFidelityFormTol (a disagreement throws ConsistencyError) and returns
/// the purification value clamped to [0,1].
double entanglement_fidelity(const Source& s, const KrausChannel& c);

/// sum_i p_i <psi_i| S(|psi_i><psi_i|) |psi_i>.
double average_fidelity(const Source& s, const KrausChannel& c);

/// Both fidelities with the ordering invariant checked.
FidelityPair fidelity_pair(const Source& s, const KrausChannel& c);

/// Right-hand side of the entropy-exchange bound:
/// (1 - F_e) log2(d^2 - 1) + h(F_e). Requires d >= 2.
double fano_bound(double entanglement_fidelity, Eigen::Index dim);

} // namespace qshannon
