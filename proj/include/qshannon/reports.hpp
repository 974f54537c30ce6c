#pragma once

// Report serialization. JSON documents have a fixed field order and print
// floats with 17 significant digits, so identical inputs serialize to
// byte-identical text. Every document embeds the tool version, the master
// seed and the tolerances in force. CSV covers flat reports only.

#include <cstdint>
#include <string>
#include <vector>

#include "qshannon/bounds.hpp"
#include "qshannon/info.hpp"

namespace qshannon {

/// Fields shared by every emitted document.
struct ReportEnvelope {
  std::string command;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

std::string entropy_report_json(const ReportEnvelope& env,
                                const std::string& source, Eigen::Index dim,
                                double entropy_bits);

std::string coherent_info_report_json(const ReportEnvelope& env,
                                      const std::string& source,
                                      const std::string& channel,
                                      const CoherentInfoBreakdown& breakdown);

std::string fidelity_report_json(const ReportEnvelope& env,
                                 const std::string& source,
                                 const std::string& channel,
                                 const FidelityPair& pair);

std::string fano_report_json(const ReportEnvelope& env, double fe,
                             Eigen::Index dim, double bound_bits);

/// Optimizer output; grid fields are emitted only when a grid cross-check
/// ran (two-state ensembles).
struct OptimizeReportFields {
  std::string kind; // "rc" or "ctilde"
  std::string source;
  std::string channel; // empty for rc
  int block_length = 1;
  int multistarts = 8;
  OptimizationResult result;
  bool has_grid = false;
  double grid_value = 0.0;
};

std::string optimize_report_json(const ReportEnvelope& env,
                                 const OptimizeReportFields& fields);

std::string bound_report_json(const ReportEnvelope& env, const BoundReport& r);
std::string bound_reports_json(const ReportEnvelope& env,
                               const std::vector<BoundReport>& reports);
std::string bound_reports_csv(const std::vector<BoundReport>& reports);

std::string suite_report_json(const ReportEnvelope& env, const SuiteReport& r);
std::string suite_report_csv(const SuiteReport& r);

} // namespace qshannon
