// Command-line front end: one verb per information quantity or theorem
// check, all reading the same JSON problem-file format.

#include <iostream>

#include "CLI11.hpp"

#include "qshannon/commands.hpp"
#include "qshannon/config.hpp"

namespace {

void add_io_flags(CLI::App* cmd, qshannon::CommandOptions& opts) {
  cmd->add_option("--input", opts.input_path, "problem file (JSON)");
  cmd->add_option("--output", opts.output_path,
                  "write the report here instead of stdout");
  cmd->add_option("--format", opts.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--seed", opts.seed, "master seed for anything randomized");
  cmd->add_option("--tolerance", opts.tolerance,
                  "slack tolerance for inequality checks");
  cmd->add_option("--n", opts.block_length, "block length")
      ->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char** argv) {
  qshannon::CommandOptions opts;

  CLI::App app{"quantum source/channel coding quantities and converse-bound checks"};
  app.set_version_flag("--version", qshannon::kVersion);
  app.require_subcommand(1);

  CLI::App* entropy = app.add_subcommand("entropy", "input entropy of a source");
  add_io_flags(entropy, opts);
  entropy->add_option("--source", opts.source_name, "source name")->required();

  CLI::App* coherent =
      app.add_subcommand("coherent-info", "coherent information of a channel");
  add_io_flags(coherent, opts);
  coherent->add_option("--source", opts.source_name, "source name")->required();
  coherent->add_option("--channel", opts.channel_name, "channel name")->required();

  CLI::App* fidelity = app.add_subcommand(
      "fidelity", "entanglement and average fidelity of a channel");
  add_io_flags(fidelity, opts);
  fidelity->add_option("--source", opts.source_name, "source name")->required();
  fidelity->add_option("--channel", opts.channel_name, "channel name")->required();

  CLI::App* fano =
      app.add_subcommand("fano", "entropy-exchange bound from a fidelity");
  add_io_flags(fano, opts);
  fano->add_option("--fe", opts.fano_fidelity, "entanglement fidelity")
      ->required();
  fano->add_option("--dim", opts.fano_dim, "output dimension")->required();

  CLI::App* optimize = app.add_subcommand(
      "optimize", "maximize a quantity over input distributions");
  add_io_flags(optimize, opts);
  optimize->add_option("variant", opts.variant, "rc or ctilde")
      ->required()
      ->check(CLI::IsMember({"rc", "ctilde"}));
  optimize->add_option("--source", opts.source_name, "source name")->required();
  optimize->add_option("--channel", opts.channel_name,
                       "channel name (ctilde only)");
  optimize->add_flag("--joint", opts.joint_channel,
                     "the named channel already acts on the whole block");

  CLI::App* converse =
      app.add_subcommand("converse", "weak-converse bound reports");
  add_io_flags(converse, opts);
  converse->add_option("variant", opts.variant, "source or channel")
      ->required()
      ->check(CLI::IsMember({"source", "channel"}));
  converse->add_option("--source", opts.source_name, "source name")->required();
  converse->add_option("--channel", opts.channel_name, "channel name");
  converse->add_option("--encoder", opts.encoder_name, "encoder channel name");
  converse->add_option("--decoder", opts.decoder_name, "decoder channel name");
  converse
      ->add_option("--rates", opts.rates,
                   "requested rates (bits/symbol) for typical-subspace codes")
      ->delimiter(',');

  CLI::App* suite =
      app.add_subcommand("suite", "randomized entropic-inequality suite");
  add_io_flags(suite, opts);
  suite->add_option("--trials", opts.trials, "trials per family")
      ->check(CLI::NonNegativeNumber);
  suite->add_option("--dim-min", opts.dim_min, "smallest sampled dimension");
  suite->add_option("--dim-max", opts.dim_max, "largest sampled dimension");
  suite->add_option("--kraus-min", opts.kraus_min, "smallest Kraus count");
  suite->add_option("--kraus-max", opts.kraus_max, "largest Kraus count");
  suite->add_option("--states-min", opts.states_min, "smallest ensemble size");
  suite->add_option("--states-max", opts.states_max, "largest ensemble size");
  CLI::Option* identity_tol = suite->add_option(
      "--identity-tolerance", opts.identity_tolerance,
      "tolerance for the relative-entropy identity family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (CLI::App* cmd : {entropy, coherent, fidelity, fano, optimize, converse, suite}) {
    if (cmd->parsed()) {
      opts.command = cmd->get_name();
    }
  }
  // An explicit --tolerance also governs the identity family unless that
  // tolerance was pinned separately.
  if (suite->parsed() && suite->count("--tolerance") > 0 &&
      identity_tol->count() == 0) {
    opts.identity_tolerance = opts.tolerance;
  }

  return qshannon::run_command(opts, std::cout, std::cerr);
}
