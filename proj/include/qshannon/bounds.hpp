#pragma once

// Converse-theorem machinery: simplex maximizers for the input entropy and
// the per-symbol coherent information, report generation for the source and
// channel weak-converse bounds, and the randomized inequality suite.

#include <cstdint>
#include <string>
#include <vector>

#include "qshannon/channels.hpp"
#include "qshannon/info.hpp"
#include "qshannon/states.hpp"

namespace qshannon {

/// Probability vector on the simplex.
struct SimplexPoint {
  Eigen::VectorXd probs;

  /// Clamp negatives to zero and renormalize to unit sum.
  static SimplexPoint normalized(Eigen::VectorXd p);
};

struct OptimizationResult {
  SimplexPoint point;
  double value = 0.0; // bits (per symbol where a block length is involved)
};

/// Multi-start Nelder-Mead settings. The search runs on the softmax
/// reparameterization of the simplex, so iterates stay feasible; start 0 is
/// the uniform point, the rest are seeded Gaussian logits. Per-start seeds
/// derive from (seed, start index), so raising multistarts never changes
/// earlier starts.
struct OptimizerOptions {
  int multistarts = 8;
  int max_iterations = 400;
  double diameter_tol = 1e-7;
  std::uint64_t seed = 0;
};

/// Maximize S(sum_i p_i |psi_i><psi_i|) over the simplex; the value is the
/// noisy-channel coding rate for this state set.
OptimizationResult maximize_input_entropy(const std::vector<Vector>& states,
                                          const OptimizerOptions& opts = {});

/// Maximize the per-symbol coherent information of the n-fold block over
/// single-symbol weights. When joint_channel is false the block channel is
/// the n-fold tensor power of c; a joint channel acting on the whole block
/// (channel with memory) may be supplied instead. The result is the best
/// value found: a lower estimate of the true maximum.
OptimizationResult maximize_coherent_info(const std::vector<Vector>& states,
                                          const KrausChannel& c,
                                          int block_length,
                                          const OptimizerOptions& opts = {},
                                          bool joint_channel = false);

/// Dense 1-D grid maximization for two-state ensembles; cross-checks the
/// direct search. Only defined for 1 or 2 states.
OptimizationResult grid_maximize_input_entropy(const std::vector<Vector>& states,
                                               double step = 1e-3);
OptimizationResult grid_maximize_coherent_info(const std::vector<Vector>& states,
                                               const KrausChannel& c,
                                               int block_length,
                                               double step = 1e-3);

/// Outcome of one converse-theorem check. For the source case the checked
/// inequality is delta <= bound_rhs with delta = entropy_rate - rate; for
/// the channel case it is bound_lhs = (R_c - C~)*n <= bound_rhs. A report
/// is satisfied iff slack = bound_rhs - lhs >= -kBoundSlackTol.
struct BoundReport {
  std::string kind; // "source" or "channel"
  int block_length = 1;

  // source fields
  double requested_rate = -1.0; // < 0 when the caller did not request a rate
  Eigen::Index code_dim = 0;
  double delta = 0.0;

  // channel fields
  double capacity_bound = 0.0;       // best C~ found (lower estimate of the max)
  double input_entropy_at_p = 0.0;   // S(rho(p)), bits/symbol
  double coherent_info_channel = 0.0; // I through the bare block channel, bits
  double coherent_info_coded = 0.0;  // I through decoder/channel/encoder, bits
  double chain_slack = 0.0;          // coherent_info_channel - coherent_info_coded
  double bound_lhs = 0.0;
  double bound_rhs_printed = 0.0;    // variant with the extra /n
  bool encoder_is_isometry = false;

  // common fields
  double rate = 0.0;         // bits/symbol: log2(code_dim)/n, or R_c
  double entropy_rate = 0.0; // S(rho) for the source case, R_c for the channel
  double entanglement_fidelity = 0.0;
  double bound_rhs = 0.0;
  double slack = 0.0;
  bool satisfied = false;
  std::vector<std::string> notes;
};

/// Check the source weak-converse bound for an encoder/decoder pair acting
/// on the n-fold block of s. The block source is the n-fold product
/// ensemble; the rate is log2(encoder output dimension)/n.
BoundReport source_converse_report(const Source& s, const KrausChannel& encoder,
                                   const KrausChannel& decoder, int n);

/// Check the channel weak-converse chain for a channel with coding. R_c and
/// C~ come from the maximizers (C~ additionally folds in the value at p, so
/// it never undercuts the reported instance); the fidelity is evaluated for
/// decoder o channel^n o encoder on the block ensemble weighted by p.
BoundReport channel_converse_report(const std::vector<Vector>& states,
                                    const SimplexPoint& p,
                                    const KrausChannel& channel,
                                    const KrausChannel& encoder,
                                    const KrausChannel& decoder, int n,
                                    const OptimizerOptions& opts = {});

/// Randomized inequality suite configuration. tolerance applies to the five
/// inequality families (pass iff violation <= tolerance, violation being the
/// positive part of -slack); identity_tolerance bounds |lhs - rhs| for the
/// relative-entropy identity family.
struct SuiteConfig {
  int trials = 1000;
  Eigen::Index dim_min = 2;
  Eigen::Index dim_max = 4;
  int kraus_min = 1;
  int kraus_max = 4;
  int states_min = 1;
  int states_max = 4;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  double identity_tolerance = 1e-8;
};

struct FamilyResult {
  std::string name;
  int trials = 0;
  int passes = 0;
  int failures = 0;
  double worst_violation = 0.0;
  int worst_trial = -1;
  std::string failing_instance; // serialized JSON of the first failure, else empty
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<FamilyResult> families;
  bool all_passed = true;
};

/// Run all six inequality families on freshly sampled random instances.
/// Failures are report content, never exceptions.
SuiteReport inequality_suite(const SuiteConfig& config);

} // namespace qshannon
