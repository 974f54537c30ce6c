#include "qshannon/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "qshannon/json_writer.hpp"

namespace qshannon {

SimplexPoint SimplexPoint::normalized(Eigen::VectorXd p) {
  if (p.size() < 1) {
    throw DimensionError("SimplexPoint: needs at least one entry");
  }
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    p[i] = std::max(p[i], 0.0);
  }
  const double sum = p.sum();
  if (sum <= 0.0) {
    throw ValidationError("SimplexPoint: all entries vanished");
  }
  return SimplexPoint{p / sum};
}

namespace {

// Weights from unconstrained logits with an implicit trailing zero logit.
Eigen::VectorXd softmax_probs(const Eigen::VectorXd& logits) {
  const Eigen::Index n = logits.size() + 1;
  double shift = 0.0;
  for (Eigen::Index i = 0; i < logits.size(); ++i) {
    shift = std::max(shift, logits[i]);
  }
  Eigen::VectorXd p(n);
  double z = 0.0;
  for (Eigen::Index i = 0; i < logits.size(); ++i) {
    p[i] = std::exp(logits[i] - shift);
    z += p[i];
  }
  p[n - 1] = std::exp(-shift);
  z += p[n - 1];
  return p / z;
}

struct NmPoint {
  Eigen::VectorXd x;
  double f = 0.0;
};

// Standard Nelder-Mead minimization (reflection 1, expansion 2, contraction
// 1/2, shrink 1/2), stopping when the simplex diameter drops below tol.
NmPoint nelder_mead_min(const std::function<double(const Eigen::VectorXd&)>& f,
                        const Eigen::VectorXd& start, int max_iterations,
                        double diameter_tol) {
  const Eigen::Index n = start.size();
  if (n == 0) {
    return NmPoint{start, f(start)};
  }
  const double initial_step = 0.5;
  std::vector<NmPoint> simplex(static_cast<std::size_t>(n) + 1);
  simplex[0] = NmPoint{start, f(start)};
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd x = start;
    x[i] += initial_step;
    simplex[static_cast<std::size_t>(i) + 1] = NmPoint{x, f(x)};
  }

  auto by_value = [](const NmPoint& a, const NmPoint& b) { return a.f < b.f; };
  for (int iter = 0; iter < max_iterations; ++iter) {
    std::sort(simplex.begin(), simplex.end(), by_value);

    double diameter = 0.0;
    for (std::size_t i = 0; i + 1 < simplex.size(); ++i) {
      for (std::size_t j = i + 1; j < simplex.size(); ++j) {
        diameter = std::max(diameter, (simplex[i].x - simplex[j].x).norm());
      }
    }
    if (diameter < diameter_tol) {
      break;
    }

    const NmPoint& best = simplex.front();
    NmPoint& worst = simplex.back();
    const NmPoint& second_worst = simplex[simplex.size() - 2];

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i + 1 < simplex.size(); ++i) {
      centroid += simplex[i].x;
    }
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd reflected = centroid + (centroid - worst.x);
    const double f_reflected = f(reflected);

    bool shrink = false;
    if (f_reflected < best.f) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - worst.x);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        worst = NmPoint{expanded, f_expanded};
      } else {
        worst = NmPoint{reflected, f_reflected};
      }
    } else if (f_reflected < second_worst.f) {
      worst = NmPoint{reflected, f_reflected};
    } else if (f_reflected < worst.f) {
      const Eigen::VectorXd contracted = centroid + 0.5 * (reflected - centroid);
      const double f_contracted = f(contracted);
      if (f_contracted <= f_reflected) {
        worst = NmPoint{contracted, f_contracted};
      } else {
        shrink = true;
      }
    } else {
      const Eigen::VectorXd contracted = centroid - 0.5 * (centroid - worst.x);
      const double f_contracted = f(contracted);
      if (f_contracted < worst.f) {
        worst = NmPoint{contracted, f_contracted};
      } else {
        shrink = true;
      }
    }

    if (shrink) {
      std::sort(simplex.begin(), simplex.end(), by_value);
      for (std::size_t i = 1; i < simplex.size(); ++i) {
        simplex[i].x = simplex[0].x + 0.5 * (simplex[i].x - simplex[0].x);
        simplex[i].f = f(simplex[i].x);
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(), by_value);
  return simplex.front();
}

// Multi-start maximization over the simplex. Start 0 is the uniform point;
// every further start draws Gaussian logits from a (seed, start) stream, so
// the evaluated starts form a prefix sequence and the best value found can
// only improve as multistarts grows.
OptimizationResult maximize_over_simplex(
    Eigen::Index n_weights,
    const std::function<double(const Eigen::VectorXd&)>& value_of,
    const OptimizerOptions& opts) {
  if (n_weights < 1) {
    throw DimensionError("maximize_over_simplex: needs at least one weight");
  }
  if (n_weights == 1) {
    Eigen::VectorXd p(1);
    p[0] = 1.0;
    return OptimizationResult{SimplexPoint{p}, value_of(p)};
  }
  const auto negated = [&](const Eigen::VectorXd& logits) {
    return -value_of(softmax_probs(logits));
  };

  OptimizationResult best;
  best.value = -std::numeric_limits<double>::infinity();
  const int starts = std::max(opts.multistarts, 1);
  for (int m = 0; m < starts; ++m) {
    Eigen::VectorXd logits = Eigen::VectorXd::Zero(n_weights - 1);
    if (m > 0) {
      Rng rng = make_rng(opts.seed, static_cast<std::uint64_t>(m));
      std::normal_distribution<double> normal(0.0, 2.0);
      for (Eigen::Index i = 0; i < logits.size(); ++i) {
        logits[i] = normal(rng);
      }
    }
    const NmPoint found =
        nelder_mead_min(negated, logits, opts.max_iterations, opts.diameter_tol);
    SimplexPoint point = SimplexPoint::normalized(softmax_probs(found.x));
    const double value = value_of(point.probs); // re-evaluate at the projected point
    if (value > best.value) {
      best.point = std::move(point);
      best.value = value;
    }
  }
  return best;
}

void check_state_set(const std::vector<Vector>& states) {
  if (states.empty()) {
    throw ValidationError("state set must contain at least one state");
  }
  const Eigen::Index d = states.front().size();
  for (const Vector& v : states) {
    if (v.size() != d) {
      throw DimensionError("state set mixes dimensions");
    }
  }
}

double input_entropy_at(const std::vector<Vector>& states,
                        const Eigen::VectorXd& probs) {
  const Eigen::Index d = states.front().size();
  Matrix rho = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < states.size(); ++i) {
    rho += probs[static_cast<Eigen::Index>(i)] *
           (states[i] * states[i].adjoint());
  }
  return spectral_log2_weighted(rho);
}

// All n-fold tensor products of the given states, in lexicographic order of
// the index tuple. The matching weight of entry m is the product of the
// single-symbol weights along its tuple.
std::vector<Vector> product_states(const std::vector<Vector>& states, int n,
                                   Eigen::Index max_dim) {
  std::vector<Vector> block;
  block.reserve(states.size());
  for (const Vector& v : states) {
    block.push_back(v);
  }
  for (int k = 1; k < n; ++k) {
    std::vector<Vector> next;
    next.reserve(block.size() * states.size());
    for (const Vector& a : block) {
      for (const Vector& b : states) {
        next.push_back(kron(a, b, max_dim));
      }
    }
    block = std::move(next);
  }
  return block;
}

Eigen::VectorXd product_probs(const Eigen::VectorXd& probs, int n) {
  Eigen::VectorXd block = probs;
  for (int k = 1; k < n; ++k) {
    Eigen::VectorXd next(block.size() * probs.size());
    Eigen::Index m = 0;
    for (Eigen::Index a = 0; a < block.size(); ++a) {
      for (Eigen::Index b = 0; b < probs.size(); ++b) {
        next[m++] = block[a] * probs[b];
      }
    }
    block = std::move(next);
  }
  return block;
}

Source product_source(const Source& s, int n,
                      Eigen::Index max_dim = kDefaultMaxDim) {
  if (n == 1) {
    return s;
  }
  return Source(product_states(s.states(), n, max_dim),
                product_probs(s.probs(), n));
}

Eigen::Index ipow_index(Eigen::Index base, int exp) {
  Eigen::Index out = 1;
  for (int k = 0; k < exp; ++k) {
    out *= base;
  }
  return out;
}

} // namespace

OptimizationResult maximize_input_entropy(const std::vector<Vector>& states,
                                          const OptimizerOptions& opts) {
  check_state_set(states);
  const auto objective = [&](const Eigen::VectorXd& probs) {
    return input_entropy_at(states, probs);
  };
  return maximize_over_simplex(static_cast<Eigen::Index>(states.size()),
                               objective, opts);
}

OptimizationResult maximize_coherent_info(const std::vector<Vector>& states,
                                          const KrausChannel& c,
                                          int block_length,
                                          const OptimizerOptions& opts,
                                          bool joint_channel) {
  check_state_set(states);
  if (block_length < 1) {
    throw DomainError("maximize_coherent_info: block length must be >= 1");
  }
  const Eigen::Index d = states.front().size();
  const KrausChannel block_channel =
      joint_channel ? c : tensor_power(c, block_length);
  if (block_channel.in_dim() != ipow_index(d, block_length)) {
    throw DimensionError(
        "maximize_coherent_info: channel does not act on the state block");
  }
  const std::vector<Vector> block_states =
      product_states(states, block_length, kDefaultMaxDim);
  const auto objective = [&](const Eigen::VectorXd& probs) {
    Source block(block_states, product_probs(probs, block_length));
    return coherent_information(block, block_channel).coherent_information /
           static_cast<double>(block_length);
  };
  return maximize_over_simplex(static_cast<Eigen::Index>(states.size()),
                               objective, opts);
}

namespace {

OptimizationResult grid_maximize(
    Eigen::Index n_weights,
    const std::function<double(const Eigen::VectorXd&)>& value_of,
    double step) {
  if (n_weights == 1) {
    Eigen::VectorXd p(1);
    p[0] = 1.0;
    return OptimizationResult{SimplexPoint{p}, value_of(p)};
  }
  if (n_weights != 2) {
    throw DomainError("grid maximization is only defined for 1 or 2 states");
  }
  if (!(step > 0.0 && step <= 1.0)) {
    throw DomainError("grid maximization: step must lie in (0, 1]");
  }
  OptimizationResult best;
  best.value = -std::numeric_limits<double>::infinity();
  const long n_steps = std::lround(1.0 / step);
  for (long k = 0; k <= n_steps; ++k) {
    const double p0 = std::min(1.0, static_cast<double>(k) * step);
    Eigen::VectorXd p(2);
    p[0] = p0;
    p[1] = 1.0 - p0;
    const double value = value_of(p);
    if (value > best.value) {
      best.point = SimplexPoint{p};
      best.value = value;
    }
  }
  return best;
}

} // namespace

OptimizationResult grid_maximize_input_entropy(const std::vector<Vector>& states,
                                               double step) {
  check_state_set(states);
  return grid_maximize(
      static_cast<Eigen::Index>(states.size()),
      [&](const Eigen::VectorXd& probs) { return input_entropy_at(states, probs); },
      step);
}

OptimizationResult grid_maximize_coherent_info(const std::vector<Vector>& states,
                                               const KrausChannel& c,
                                               int block_length, double step) {
  check_state_set(states);
  const Eigen::Index d = states.front().size();
  const KrausChannel block_channel = tensor_power(c, block_length);
  if (block_channel.in_dim() != ipow_index(d, block_length)) {
    throw DimensionError(
        "grid_maximize_coherent_info: channel does not act on the state block");
  }
  const std::vector<Vector> block_states =
      product_states(states, block_length, kDefaultMaxDim);
  const auto objective = [&](const Eigen::VectorXd& probs) {
    Source block(block_states, product_probs(probs, block_length));
    return coherent_information(block, block_channel).coherent_information /
           static_cast<double>(block_length);
  };
  return grid_maximize(static_cast<Eigen::Index>(states.size()), objective,
                       step);
}

BoundReport source_converse_report(const Source& s, const KrausChannel& encoder,
                                   const KrausChannel& decoder, int n) {
  if (n < 1) {
    throw DomainError("source_converse_report: block length must be >= 1");
  }
  const Eigen::Index d = s.dim();
  const Eigen::Index block_dim = ipow_index(d, n);
  if (encoder.in_dim() != block_dim || decoder.out_dim() != block_dim) {
    throw DimensionError(
        "source_converse_report: coding pair does not act on the " +
        std::to_string(block_dim) + "-dimensional block");
  }
  const KrausChannel composite = compose(decoder, encoder);
  const Source block = product_source(s, n);

  BoundReport report;
  report.kind = "source";
  report.block_length = n;
  report.code_dim = encoder.out_dim();
  report.rate = std::log2(static_cast<double>(report.code_dim)) /
                static_cast<double>(n);
  report.entropy_rate = von_neumann_entropy(density_of_source(s));
  report.delta = report.entropy_rate - report.rate;
  report.entanglement_fidelity = entanglement_fidelity(block, composite);
  const double dim_term =
      std::log2(static_cast<double>(block_dim) * static_cast<double>(block_dim) -
                1.0);
  report.bound_rhs = ((1.0 - report.entanglement_fidelity) * dim_term +
                      binary_entropy(report.entanglement_fidelity)) /
                     static_cast<double>(n);
  report.slack = report.bound_rhs - report.delta;
  report.satisfied = report.slack >= -kBoundSlackTol;
  report.notes.push_back(
      "the source capacity is bounded below by entropy_rate; compressing "
      "below it forces the entanglement fidelity away from 1");
  return report;
}

BoundReport channel_converse_report(const std::vector<Vector>& states,
                                    const SimplexPoint& p,
                                    const KrausChannel& channel,
                                    const KrausChannel& encoder,
                                    const KrausChannel& decoder, int n,
                                    const OptimizerOptions& opts) {
  check_state_set(states);
  if (n < 1) {
    throw DomainError("channel_converse_report: block length must be >= 1");
  }
  const Eigen::Index d = states.front().size();
  if (channel.in_dim() != d || channel.out_dim() != d) {
    throw DimensionError(
        "channel_converse_report: channel must map the state space to itself");
  }
  const Eigen::Index block_dim = ipow_index(d, n);
  if (encoder.in_dim() != block_dim || encoder.out_dim() != block_dim ||
      decoder.in_dim() != block_dim || decoder.out_dim() != block_dim) {
    throw DimensionError(
        "channel_converse_report: coding pair must act on the " +
        std::to_string(block_dim) + "-dimensional block");
  }
  if (p.probs.size() != static_cast<Eigen::Index>(states.size())) {
    throw DimensionError(
        "channel_converse_report: weight count does not match the state set");
  }

  const KrausChannel block_channel = tensor_power(channel, n);
  const KrausChannel coded =
      compose(decoder, compose(block_channel, encoder));

  const Source single(states, p.probs);
  const Source block = product_source(single, n);

  BoundReport report;
  report.kind = "channel";
  report.block_length = n;

  const OptimizationResult rc = maximize_input_entropy(states, opts);
  report.rate = rc.value;
  report.entropy_rate = rc.value;

  const OptimizationResult ct =
      maximize_coherent_info(states, channel, n, opts);
  report.coherent_info_channel =
      coherent_information(block, block_channel).coherent_information;
  report.coherent_info_coded =
      coherent_information(block, coded).coherent_information;
  report.chain_slack = report.coherent_info_channel - report.coherent_info_coded;
  // Best value found anywhere, including at the reported weights.
  report.capacity_bound =
      std::max(ct.value,
               report.coherent_info_channel / static_cast<double>(n));

  report.input_entropy_at_p = input_entropy_at(states, p.probs);
  report.entanglement_fidelity = entanglement_fidelity(block, coded);
  report.encoder_is_isometry = encoder.kraus().size() == 1;

  report.bound_lhs =
      (report.rate - report.capacity_bound) * static_cast<double>(n);
  const double dim_term =
      std::log2(static_cast<double>(block_dim) * static_cast<double>(block_dim) -
                1.0);
  report.bound_rhs = (1.0 - report.entanglement_fidelity) * dim_term +
                     binary_entropy(report.entanglement_fidelity);
  report.bound_rhs_printed = report.bound_rhs / static_cast<double>(n);
  report.slack = report.bound_rhs - report.bound_lhs;
  report.satisfied = report.slack >= -kBoundSlackTol;

  report.notes.push_back(
      "the channel capacity is bounded above by capacity_bound");
  report.notes.push_back(
      "capacity_bound is the best value found by multi-start search, a lower "
      "estimate of the true maximum");
  report.notes.push_back(
      "bound_rhs is the derivation-form right side; bound_rhs_printed divides "
      "it by the block length once more and is recorded for comparison only");
  return report;
}

namespace {

void write_complex(JsonWriter& w, const Complex& z) {
  w.begin_array().value(z.real()).value(z.imag()).end_array();
}

void write_matrix(JsonWriter& w, const Matrix& m) {
  w.begin_array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    w.begin_array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      write_complex(w, m(i, j));
    }
    w.end_array();
  }
  w.end_array();
}

void write_vector(JsonWriter& w, const Vector& v) {
  w.begin_array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    write_complex(w, v[i]);
  }
  w.end_array();
}

void write_source(JsonWriter& w, const Source& s) {
  w.begin_object();
  w.key("probs").begin_array();
  for (Eigen::Index i = 0; i < s.probs().size(); ++i) {
    w.value(s.probs()[i]);
  }
  w.end_array();
  w.key("states").begin_array();
  for (const Vector& v : s.states()) {
    write_vector(w, v);
  }
  w.end_array();
  w.end_object();
}

void write_channel(JsonWriter& w, const KrausChannel& c) {
  w.begin_object();
  w.key("kraus").begin_array();
  for (const Matrix& a : c.kraus()) {
    write_matrix(w, a);
  }
  w.end_array();
  w.end_object();
}

struct SuiteSampler {
  const SuiteConfig& config;

  Eigen::Index dim(Rng& rng) const {
    std::uniform_int_distribution<Eigen::Index> pick(config.dim_min,
                                                     config.dim_max);
    return pick(rng);
  }

  int kraus_count(Rng& rng, Eigen::Index d_in, Eigen::Index d_out) const {
    std::uniform_int_distribution<int> pick(config.kraus_min, config.kraus_max);
    const int k = pick(rng);
    const int feasible = static_cast<int>((d_in + d_out - 1) / d_out);
    return std::max(k, feasible);
  }

  int state_count(Rng& rng) const {
    std::uniform_int_distribution<int> pick(config.states_min,
                                            config.states_max);
    return pick(rng);
  }
};

// One inequality family: samples an instance from rng, returns the violation
// magnitude (0 when the statement holds) and, when dump is non-null, writes
// the sampled instance into it.
using FamilyTrial = std::function<double(Rng&, JsonWriter*)>;

FamilyResult run_family(const std::string& name, std::uint64_t family_index,
                        const SuiteConfig& config, double tolerance,
                        const FamilyTrial& trial) {
  FamilyResult result;
  result.name = name;
  result.trials = config.trials;
  for (int t = 0; t < config.trials; ++t) {
    const std::uint64_t stream =
        (family_index << 32) | static_cast<std::uint64_t>(t);
    Rng rng = make_rng(config.seed, stream);
    const double violation = trial(rng, nullptr);
    const bool pass = violation <= tolerance;
    if (pass) {
      ++result.passes;
    } else {
      ++result.failures;
      if (result.failing_instance.empty()) {
        JsonWriter w;
        w.begin_object();
        w.key("family").value(name);
        w.key("trial").value(t);
        w.key("violation").value(violation);
        w.key("instance");
        Rng replay = make_rng(config.seed, stream);
        trial(replay, &w);
        w.end_object();
        result.failing_instance = w.take();
      }
    }
    if (violation > result.worst_violation) {
      result.worst_violation = violation;
      result.worst_trial = t;
    }
  }
  return result;
}

} // namespace

SuiteReport inequality_suite(const SuiteConfig& config) {
  if (config.trials < 0) {
    throw DomainError("inequality_suite: trial count must be >= 0");
  }
  if (config.dim_min < 1 || config.dim_max < config.dim_min) {
    throw DomainError("inequality_suite: bad dimension range");
  }
  if (config.kraus_min < 1 || config.kraus_max < config.kraus_min) {
    throw DomainError("inequality_suite: bad Kraus count range");
  }
  if (config.states_min < 1 || config.states_max < config.states_min) {
    throw DomainError("inequality_suite: bad state count range");
  }
  const SuiteSampler sample{config};

  const FamilyTrial fidelity_order = [&](Rng& rng, JsonWriter* dump) {
    const Eigen::Index d = sample.dim(rng);
    const Source s = random_source(d, sample.state_count(rng), rng);
    const KrausChannel c = random_channel(d, d, sample.kraus_count(rng, d, d), rng);
    const double fe = entanglement_fidelity(s, c);
    const double fav = average_fidelity(s, c);
    if (dump) {
      dump->begin_object();
      dump->key("source");
      write_source(*dump, s);
      dump->key("channel");
      write_channel(*dump, c);
      dump->key("entanglement_fidelity").value(fe);
      dump->key("average_fidelity").value(fav);
      dump->end_object();
    }
    return std::max(0.0, fe - fav);
  };

  const FamilyTrial relative_entropy_monotonicity = [&](Rng& rng,
                                                        JsonWriter* dump) {
    const Eigen::Index d = sample.dim(rng);
    const DensityMatrix r1 = random_density(d, rng);
    const DensityMatrix r2 = random_density(d, rng);
    const KrausChannel c = random_channel(d, d, sample.kraus_count(rng, d, d), rng);
    const std::optional<double> before = relative_entropy(r1, r2);
    double violation = 0.0;
    double after_value = 0.0;
    bool vacuous = !before.has_value();
    if (!vacuous) {
      const std::optional<double> after =
          relative_entropy(apply(c, r1), apply(c, r2));
      if (after.has_value()) {
        after_value = *after;
        violation = std::max(0.0, after_value - *before);
      } else {
        // Monotonicity forbids a finite divergence turning infinite.
        violation = std::numeric_limits<double>::max();
      }
    }
    if (dump) {
      dump->begin_object();
      dump->key("rho1");
      write_matrix(*dump, r1.matrix());
      dump->key("rho2");
      write_matrix(*dump, r2.matrix());
      dump->key("channel");
      write_channel(*dump, c);
      dump->key("vacuous").value(vacuous);
      if (!vacuous) {
        dump->key("before").value(*before);
        dump->key("after").value(after_value);
      }
      dump->end_object();
    }
    return violation;
  };

  const FamilyTrial coherent_info_monotonicity = [&](Rng& rng,
                                                     JsonWriter* dump) {
    const Eigen::Index d1 = sample.dim(rng);
    const Source s = random_source(d1, sample.state_count(rng), rng);
    const Eigen::Index d2 = sample.dim(rng);
    const Eigen::Index d3 = sample.dim(rng);
    const KrausChannel first =
        random_channel(d1, d2, sample.kraus_count(rng, d1, d2), rng);
    const KrausChannel second =
        random_channel(d2, d3, sample.kraus_count(rng, d2, d3), rng);
    const double i_first = coherent_information(s, first).coherent_information;
    const double i_both =
        coherent_information(s, compose(second, first)).coherent_information;
    if (dump) {
      dump->begin_object();
      dump->key("source");
      write_source(*dump, s);
      dump->key("first");
      write_channel(*dump, first);
      dump->key("second");
      write_channel(*dump, second);
      dump->key("coherent_info_first").value(i_first);
      dump->key("coherent_info_composed").value(i_both);
      dump->end_object();
    }
    return std::max(0.0, i_both - i_first);
  };

  const FamilyTrial entropy_increase_unital = [&](Rng& rng, JsonWriter* dump) {
    const Eigen::Index d = sample.dim(rng);
    const KrausChannel c =
        random_mixed_unitary_channel(d, sample.kraus_count(rng, d, d), rng);
    const DensityMatrix rho = random_density(d, rng);
    const double before = von_neumann_entropy(rho);
    const double after = von_neumann_entropy(apply(c, rho));
    if (dump) {
      dump->begin_object();
      dump->key("rho");
      write_matrix(*dump, rho.matrix());
      dump->key("channel");
      write_channel(*dump, c);
      dump->key("entropy_before").value(before);
      dump->key("entropy_after").value(after);
      dump->end_object();
    }
    return std::max(0.0, before - after);
  };

  const FamilyTrial entropy_exchange_fano = [&](Rng& rng, JsonWriter* dump) {
    const Eigen::Index d = sample.dim(rng);
    const Source s = random_source(d, sample.state_count(rng), rng);
    const KrausChannel c = random_channel(d, d, sample.kraus_count(rng, d, d), rng);
    const double exchange = entropy_exchange(s, c);
    const double fe = entanglement_fidelity(s, c);
    const double bound = fano_bound(fe, d);
    if (dump) {
      dump->begin_object();
      dump->key("source");
      write_source(*dump, s);
      dump->key("channel");
      write_channel(*dump, c);
      dump->key("entropy_exchange").value(exchange);
      dump->key("bound").value(bound);
      dump->end_object();
    }
    return std::max(0.0, exchange - bound);
  };

  const FamilyTrial relative_entropy_identity = [&](Rng& rng,
                                                    JsonWriter* dump) {
    const Eigen::Index d_in = sample.dim(rng);
    const Eigen::Index d_out = sample.dim(rng);
    const Source s = random_source(d_in, sample.state_count(rng), rng);
    const KrausChannel c =
        random_channel(d_in, d_out, sample.kraus_count(rng, d_in, d_out), rng);
    const DensityMatrix extended = extended_channel_output(s, c);
    const DensityMatrix ref = reference_state(s);
    const DensityMatrix output = apply(c, density_of_source(s));
    const DensityMatrix product(kron(ref.matrix(), output.matrix()));
    const std::optional<double> lhs = relative_entropy(extended, product);
    double violation = 0.0;
    double rhs = 0.0;
    const bool vacuous = !lhs.has_value();
    if (!vacuous) {
      rhs = -von_neumann_entropy(extended) + von_neumann_entropy(ref) +
            von_neumann_entropy(output);
      violation = std::abs(*lhs - rhs);
    }
    if (dump) {
      dump->begin_object();
      dump->key("source");
      write_source(*dump, s);
      dump->key("channel");
      write_channel(*dump, c);
      dump->key("vacuous").value(vacuous);
      if (!vacuous) {
        dump->key("lhs").value(*lhs);
        dump->key("rhs").value(rhs);
      }
      dump->end_object();
    }
    return violation;
  };

  SuiteReport report;
  report.config = config;
  report.families.push_back(run_family("fidelity_order", 0, config,
                                       config.tolerance, fidelity_order));
  report.families.push_back(run_family("relative_entropy_monotonicity", 1,
                                       config, config.tolerance,
                                       relative_entropy_monotonicity));
  report.families.push_back(run_family("coherent_info_monotonicity", 2, config,
                                       config.tolerance,
                                       coherent_info_monotonicity));
  report.families.push_back(run_family("entropy_increase_unital", 3, config,
                                       config.tolerance,
                                       entropy_increase_unital));
  report.families.push_back(run_family("entropy_exchange_fano", 4, config,
                                       config.tolerance, entropy_exchange_fano));
  report.families.push_back(run_family("relative_entropy_identity", 5, config,
                                       config.identity_tolerance,
                                       relative_entropy_identity));
  for (const FamilyResult& family : report.families) {
    if (family.failures > 0) {
      report.all_passed = false;
    }
  }
  return report;
}

} // namespace qshannon
