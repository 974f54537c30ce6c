#pragma once

// Command dispatch shared by the CLI binary and the in-process tests.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qshannon {

struct CommandOptions {
  std::string command;  // entropy | coherent-info | fidelity | fano |
                        // optimize | converse | suite
  std::string variant;  // optimize: rc | ctilde; converse: source | channel
  std::string input_path;
  std::string output_path; // empty writes to the out stream
  std::string format = "json";
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  int block_length = 1;

  std::string source_name;
  std::string channel_name;
  std::string encoder_name;
  std::string decoder_name;
  std::vector<double> rates; // converse source sweep
  bool joint_channel = false;

  double fano_fidelity = -1.0;
  long fano_dim = 0;

  int trials = 1000;
  long dim_min = 2;
  long dim_max = 4;
  int kraus_min = 1;
  int kraus_max = 4;
  int states_min = 1;
  int states_max = 4;
  double identity_tolerance = 1e-8;
};

/// Execute one command, writing the report to opts.output_path (or `out`)
/// and diagnostics to `err`. Exit status: 0 on success or satisfied bounds,
/// 1 on a bound violation or suite failure, 2 on usage or parse errors.
int run_command(const CommandOptions& opts, std::ostream& out,
                std::ostream& err);

} // namespace qshannon
