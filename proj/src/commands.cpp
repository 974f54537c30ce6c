#include "qshannon/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "qshannon/problem_file.hpp"
#include "qshannon/reports.hpp"

namespace qshannon {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void usage_error(const std::string& what) {
  throw DomainError(what);
}

const Source& named_source(const ProblemFile& file, const std::string& name) {
  if (name.empty()) {
    usage_error("this command needs --source");
  }
  const auto it = file.sources.find(name);
  if (it == file.sources.end()) {
    throw ValidationError("unknown source \"" + name + "\"");
  }
  return it->second;
}

const KrausChannel& named_channel(const ProblemFile& file,
                                  const std::string& name,
                                  const std::string& flag) {
  if (name.empty()) {
    usage_error("this command needs --" + flag);
  }
  const auto it = file.channels.find(name);
  if (it == file.channels.end()) {
    throw ValidationError("unknown channel \"" + name + "\"");
  }
  return it->second;
}

void require_json(const CommandOptions& opts) {
  if (opts.format != "json") {
    usage_error("this report is nested and only serializes as JSON");
  }
}

void emit(const CommandOptions& opts, std::ostream& out,
          const std::string& text) {
  if (opts.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.output_path, std::ios::binary);
  if (!file) {
    throw ValidationError("cannot open output file '" + opts.output_path + "'");
  }
  file << text;
}

ReportEnvelope envelope_for(const CommandOptions& opts) {
  ReportEnvelope env;
  env.command = opts.command;
  if (!opts.variant.empty()) {
    env.command += " " + opts.variant;
  }
  env.seed = opts.seed;
  env.tolerance = opts.tolerance;
  return env;
}

ProblemFile load_input(const CommandOptions& opts) {
  if (opts.input_path.empty()) {
    usage_error("this command needs --input");
  }
  return load_problem_file(opts.input_path);
}

int run_entropy(const CommandOptions& opts, std::ostream& out) {
  require_json(opts);
  const ProblemFile file = load_input(opts);
  const Source& s = named_source(file, opts.source_name);
  const double bits = von_neumann_entropy(density_of_source(s));
  emit(opts, out,
       entropy_report_json(envelope_for(opts), opts.source_name, s.dim(), bits));
  return kExitOk;
}

int run_coherent_info(const CommandOptions& opts, std::ostream& out) {
  require_json(opts);
  const ProblemFile file = load_input(opts);
  const Source& s = named_source(file, opts.source_name);
  const KrausChannel& c = named_channel(file, opts.channel_name, "channel");
  const CoherentInfoBreakdown breakdown = coherent_information(s, c);
  emit(opts, out,
       coherent_info_report_json(envelope_for(opts), opts.source_name,
                                 opts.channel_name, breakdown));
  return kExitOk;
}

int run_fidelity(const CommandOptions& opts, std::ostream& out) {
  require_json(opts);
  const ProblemFile file = load_input(opts);
  const Source& s = named_source(file, opts.source_name);
  const KrausChannel& c = named_channel(file, opts.channel_name, "channel");
  const FidelityPair pair = fidelity_pair(s, c);
  emit(opts, out,
       fidelity_report_json(envelope_for(opts), opts.source_name,
                            opts.channel_name, pair));
  return kExitOk;
}

int run_fano(const CommandOptions& opts, std::ostream& out) {
  require_json(opts);
  if (opts.fano_fidelity < 0.0 || opts.fano_dim == 0) {
    usage_error("fano needs --fe and --dim");
  }
  const double bound = fano_bound(opts.fano_fidelity, opts.fano_dim);
  emit(opts, out,
       fano_report_json(envelope_for(opts), opts.fano_fidelity, opts.fano_dim,
                        bound));
  return kExitOk;
}

int run_optimize(const CommandOptions& opts, std::ostream& out) {
  require_json(opts);
  const ProblemFile file = load_input(opts);
  const Source& s = named_source(file, opts.source_name);

  OptimizerOptions optimizer;
  optimizer.seed = opts.seed;

  OptimizeReportFields fields;
  fields.kind = opts.variant;
  fields.source = opts.source_name;
  fields.multistarts = optimizer.multistarts;

  if (opts.variant == "rc") {
    fields.result = maximize_input_entropy(s.states(), optimizer);
    if (s.size() <= 2) {
      fields.has_grid = true;
      fields.grid_value = grid_maximize_input_entropy(s.states()).value;
    }
  } else if (opts.variant == "ctilde") {
    const KrausChannel& c = named_channel(file, opts.channel_name, "channel");
    fields.channel = opts.channel_name;
    fields.block_length = opts.block_length;
    fields.result = maximize_coherent_info(s.states(), c, opts.block_length,
                                           optimizer, opts.joint_channel);
    if (s.size() <= 2 && !opts.joint_channel) {
      fields.has_grid = true;
      fields.grid_value =
          grid_maximize_coherent_info(s.states(), c, opts.block_length).value;
    }
  } else {
    usage_error("optimize needs a variant: rc or ctilde");
  }
  emit(opts, out, optimize_report_json(envelope_for(opts), fields));
  return kExitOk;
}

int run_converse_source(const CommandOptions& opts, std::ostream& out) {
  const ProblemFile file = load_input(opts);
  const Source& s = named_source(file, opts.source_name);
  const int n = opts.block_length;

  std::vector<BoundReport> reports;
  if (!opts.encoder_name.empty() || !opts.decoder_name.empty()) {
    if (!opts.rates.empty()) {
      usage_error("pass either --rates or an --encoder/--decoder pair, not both");
    }
    require_json(opts);
    const KrausChannel& encoder =
        named_channel(file, opts.encoder_name, "encoder");
    const KrausChannel& decoder =
        named_channel(file, opts.decoder_name, "decoder");
    reports.push_back(source_converse_report(s, encoder, decoder, n));
  } else {
    if (opts.rates.empty()) {
      usage_error("converse source needs --rates (or --encoder/--decoder)");
    }
    const DensityMatrix rho = density_of_source(s);
    for (const double rate : opts.rates) {
      const TypicalSubspaceCode code = typical_subspace_encoder(rho, n, rate);
      BoundReport report = source_converse_report(s, code.encoder, code.decoder, n);
      report.requested_rate = rate;
      reports.push_back(std::move(report));
    }
  }

  if (opts.format == "csv") {
    emit(opts, out, bound_reports_csv(reports));
  } else {
    emit(opts, out, bound_reports_json(envelope_for(opts), reports));
  }
  for (const BoundReport& report : reports) {
    if (!report.satisfied) {
      return kExitViolation;
    }
  }
  return kExitOk;
}

int run_converse_channel(const CommandOptions& opts, std::ostream& out) {
  require_json(opts);
  const ProblemFile file = load_input(opts);
  const Source& s = named_source(file, opts.source_name);
  const KrausChannel& channel = named_channel(file, opts.channel_name, "channel");
  const int n = opts.block_length;

  Eigen::Index block_dim = 1;
  for (int k = 0; k < n; ++k) {
    block_dim *= s.dim();
  }
  const KrausChannel identity_coding = identity_channel(block_dim);
  const KrausChannel& encoder =
      opts.encoder_name.empty() ? identity_coding
                                : named_channel(file, opts.encoder_name, "encoder");
  const KrausChannel& decoder =
      opts.decoder_name.empty() ? identity_coding
                                : named_channel(file, opts.decoder_name, "decoder");

  OptimizerOptions optimizer;
  optimizer.seed = opts.seed;
  const SimplexPoint p{s.probs()};
  const BoundReport report =
      channel_converse_report(s.states(), p, channel, encoder, decoder, n,
                              optimizer);
  emit(opts, out, bound_report_json(envelope_for(opts), report));
  return report.satisfied ? kExitOk : kExitViolation;
}

int run_suite(const CommandOptions& opts, std::ostream& out) {
  SuiteConfig config;
  config.trials = opts.trials;
  config.dim_min = opts.dim_min;
  config.dim_max = opts.dim_max;
  config.kraus_min = opts.kraus_min;
  config.kraus_max = opts.kraus_max;
  config.states_min = opts.states_min;
  config.states_max = opts.states_max;
  config.seed = opts.seed;
  config.tolerance = opts.tolerance;
  config.identity_tolerance = opts.identity_tolerance;

  const SuiteReport report = inequality_suite(config);
  if (opts.format == "csv") {
    emit(opts, out, suite_report_csv(report));
  } else {
    emit(opts, out, suite_report_json(envelope_for(opts), report));
  }
  return report.all_passed ? kExitOk : kExitViolation;
}

} // namespace

int run_command(const CommandOptions& opts, std::ostream& out,
                std::ostream& err) {
  try {
    if (opts.format != "json" && opts.format != "csv") {
      usage_error("unknown format '" + opts.format + "'");
    }
    if (opts.command == "entropy") {
      return run_entropy(opts, out);
    }
    if (opts.command == "coherent-info") {
      return run_coherent_info(opts, out);
    }
    if (opts.command == "fidelity") {
      return run_fidelity(opts, out);
    }
    if (opts.command == "fano") {
      return run_fano(opts, out);
    }
    if (opts.command == "optimize") {
      return run_optimize(opts, out);
    }
    if (opts.command == "converse") {
      if (opts.variant == "source") {
        return run_converse_source(opts, out);
      }
      if (opts.variant == "channel") {
        return run_converse_channel(opts, out);
      }
      usage_error("converse needs a variant: source or channel");
    }
    if (opts.command == "suite") {
      return run_suite(opts, out);
    }
    usage_error("unknown command '" + opts.command + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

} // namespace qshannon
