#include "qshannon/reports.hpp"

#include <cstdio>

#include "qshannon/config.hpp"
#include "qshannon/json_writer.hpp"

namespace qshannon {

namespace {

JsonWriter open_envelope(const ReportEnvelope& env) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value(kSchemaVersion);
  w.key("tool_version").value(kVersion);
  w.key("command").value(env.command);
  w.key("seed").value(env.seed);
  w.key("tolerance").value(env.tolerance);
  w.key("report");
  return w;
}

std::string close_envelope(JsonWriter& w) {
  w.end_object();
  std::string out = w.take();
  out += '\n';
  return out;
}

std::string csv_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_bound_report_body(JsonWriter& w, const BoundReport& r) {
  w.begin_object();
  w.key("kind").value(r.kind);
  w.key("block_length").value(r.block_length);
  if (r.kind == "source") {
    if (r.requested_rate >= 0.0) {
      w.key("requested_rate").value(r.requested_rate);
    }
    w.key("code_dim").value(static_cast<std::int64_t>(r.code_dim));
    w.key("rate").value(r.rate);
    w.key("entropy_rate").value(r.entropy_rate);
    w.key("delta").value(r.delta);
    if (r.requested_rate >= 0.0) {
      w.key("delta_requested").value(r.entropy_rate - r.requested_rate);
    }
    w.key("entanglement_fidelity").value(r.entanglement_fidelity);
    w.key("bound_rhs").value(r.bound_rhs);
    w.key("slack").value(r.slack);
    w.key("satisfied").value(r.satisfied);
  } else {
    w.key("rate").value(r.rate);
    w.key("entropy_rate").value(r.entropy_rate);
    w.key("capacity_bound").value(r.capacity_bound);
    w.key("input_entropy_at_p").value(r.input_entropy_at_p);
    w.key("coherent_info_channel_bits").value(r.coherent_info_channel);
    w.key("coherent_info_coded_bits").value(r.coherent_info_coded);
    w.key("chain_slack").value(r.chain_slack);
    w.key("entanglement_fidelity").value(r.entanglement_fidelity);
    w.key("bound_lhs").value(r.bound_lhs);
    w.key("bound_rhs").value(r.bound_rhs);
    w.key("bound_rhs_printed").value(r.bound_rhs_printed);
    w.key("slack").value(r.slack);
    w.key("satisfied").value(r.satisfied);
    w.key("encoder_is_isometry").value(r.encoder_is_isometry);
  }
  w.key("notes").begin_array();
  for (const std::string& note : r.notes) {
    w.value(note);
  }
  w.end_array();
  w.end_object();
}

} // namespace

std::string entropy_report_json(const ReportEnvelope& env,
                                const std::string& source, Eigen::Index dim,
                                double entropy_bits) {
  JsonWriter w = open_envelope(env);
  w.begin_object();
  w.key("source").value(source);
  w.key("dim").value(static_cast<std::int64_t>(dim));
  w.key("entropy_bits").value(entropy_bits);
  w.end_object();
  return close_envelope(w);
}

std::string coherent_info_report_json(const ReportEnvelope& env,
                                      const std::string& source,
                                      const std::string& channel,
                                      const CoherentInfoBreakdown& breakdown) {
  JsonWriter w = open_envelope(env);
  w.begin_object();
  w.key("source").value(source);
  w.key("channel").value(channel);
  w.key("output_entropy_bits").value(breakdown.output_entropy);
  w.key("entropy_exchange_bits").value(breakdown.entropy_exchange);
  w.key("coherent_information_bits").value(breakdown.coherent_information);
  w.end_object();
  return close_envelope(w);
}

std::string fidelity_report_json(const ReportEnvelope& env,
                                 const std::string& source,
                                 const std::string& channel,
                                 const FidelityPair& pair) {
  JsonWriter w = open_envelope(env);
  w.begin_object();
  w.key("source").value(source);
  w.key("channel").value(channel);
  w.key("entanglement_fidelity").value(pair.entanglement_fidelity);
  w.key("average_fidelity").value(pair.average_fidelity);
  w.end_object();
  return close_envelope(w);
}

std::string fano_report_json(const ReportEnvelope& env, double fe,
                             Eigen::Index dim, double bound_bits) {
  JsonWriter w = open_envelope(env);
  w.begin_object();
  w.key("entanglement_fidelity").value(fe);
  w.key("dim").value(static_cast<std::int64_t>(dim));
  w.key("bound_bits").value(bound_bits);
  w.end_object();
  return close_envelope(w);
}

std::string optimize_report_json(const ReportEnvelope& env,
                                 const OptimizeReportFields& fields) {
  JsonWriter w = open_envelope(env);
  w.begin_object();
  w.key("kind").value(fields.kind);
  w.key("source").value(fields.source);
  if (!fields.channel.empty()) {
    w.key("channel").value(fields.channel);
    w.key("block_length").value(fields.block_length);
  }
  w.key("multistarts").value(fields.multistarts);
  w.key("probs").begin_array();
  for (Eigen::Index i = 0; i < fields.result.point.probs.size(); ++i) {
    w.value(fields.result.point.probs[i]);
  }
  w.end_array();
  w.key("value_bits").value(fields.result.value);
  if (fields.kind == "ctilde") {
    w.key("note").value(
        "value_bits is per symbol and is the best value found, a lower "
        "estimate of the true maximum");
  }
  if (fields.has_grid) {
    w.key("grid_value_bits").value(fields.grid_value);
    w.key("grid_gap").value(fields.result.value - fields.grid_value);
  }
  w.end_object();
  return close_envelope(w);
}

std::string bound_report_json(const ReportEnvelope& env, const BoundReport& r) {
  JsonWriter w = open_envelope(env);
  write_bound_report_body(w, r);
  return close_envelope(w);
}

std::string bound_reports_json(const ReportEnvelope& env,
                               const std::vector<BoundReport>& reports) {
  JsonWriter w = open_envelope(env);
  w.begin_object();
  w.key("reports").begin_array();
  for (const BoundReport& r : reports) {
    write_bound_report_body(w, r);
  }
  w.end_array();
  w.end_object();
  return close_envelope(w);
}

std::string bound_reports_csv(const std::vector<BoundReport>& reports) {
  std::string out =
      "block_length,requested_rate,code_dim,rate,entropy_rate,delta,"
      "delta_requested,entanglement_fidelity,bound_rhs,slack,satisfied\n";
  for (const BoundReport& r : reports) {
    out += std::to_string(r.block_length);
    out += ',';
    out += csv_double(r.requested_rate);
    out += ',';
    out += std::to_string(r.code_dim);
    out += ',';
    out += csv_double(r.rate);
    out += ',';
    out += csv_double(r.entropy_rate);
    out += ',';
    out += csv_double(r.delta);
    out += ',';
    out += csv_double(r.entropy_rate - r.requested_rate);
    out += ',';
    out += csv_double(r.entanglement_fidelity);
    out += ',';
    out += csv_double(r.bound_rhs);
    out += ',';
    out += csv_double(r.slack);
    out += ',';
    out += r.satisfied ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string suite_report_json(const ReportEnvelope& env, const SuiteReport& r) {
  JsonWriter w = open_envelope(env);
  w.begin_object();
  w.key("config").begin_object();
  w.key("trials").value(r.config.trials);
  w.key("dim_min").value(static_cast<std::int64_t>(r.config.dim_min));
  w.key("dim_max").value(static_cast<std::int64_t>(r.config.dim_max));
  w.key("kraus_min").value(r.config.kraus_min);
  w.key("kraus_max").value(r.config.kraus_max);
  w.key("states_min").value(r.config.states_min);
  w.key("states_max").value(r.config.states_max);
  w.key("seed").value(r.config.seed);
  w.key("tolerance").value(r.config.tolerance);
  w.key("identity_tolerance").value(r.config.identity_tolerance);
  w.end_object();
  w.key("families").begin_array();
  for (const FamilyResult& family : r.families) {
    w.begin_object();
    w.key("name").value(family.name);
    w.key("trials").value(family.trials);
    w.key("passes").value(family.passes);
    w.key("failures").value(family.failures);
    w.key("worst_violation").value(family.worst_violation);
    w.key("worst_trial").value(family.worst_trial);
    w.key("failing_instance");
    if (family.failing_instance.empty()) {
      w.null();
    } else {
      w.raw(family.failing_instance);
    }
    w.end_object();
  }
  w.end_array();
  w.key("all_passed").value(r.all_passed);
  w.end_object();
  return close_envelope(w);
}

std::string suite_report_csv(const SuiteReport& r) {
  std::string out = "family,trials,passes,failures,worst_violation,worst_trial\n";
  for (const FamilyResult& family : r.families) {
    out += family.name;
    out += ',';
    out += std::to_string(family.trials);
    out += ',';
    out += std::to_string(family.passes);
    out += ',';
    out += std::to_string(family.failures);
    out += ',';
    out += csv_double(family.worst_violation);
    out += ',';
    out += std::to_string(family.worst_trial);
    out += '\n';
  }
  return out;
}

} // namespace qshannon
