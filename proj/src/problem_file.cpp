#include "qshannon/problem_file.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace qshannon {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

Complex parse_complex(const json& j, const std::string& where) {
  if (j.is_number()) {
    return Complex(j.get<double>(), 0.0);
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  fail(where, "expected a real number or an [re, im] pair");
}

Vector parse_state(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    fail(where, "expected a non-empty array of complex scalars");
  }
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] =
        parse_complex(j[i], where + "[" + std::to_string(i) + "]");
  }
  return v;
}

Matrix parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    fail(where, "expected a non-empty row-major nested array");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) {
      fail(row_where, "row length differs from the first row");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          parse_complex(j[r][c], row_where + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

Source parse_source(const json& j, const std::string& name) {
  const std::string where = "source '" + name + "'";
  if (!j.is_object()) {
    fail(where, "expected an object with 'probs' and 'states'");
  }
  if (!j.contains("probs") || !j.contains("states")) {
    fail(where, "missing 'probs' or 'states'");
  }
  const json& jp = j["probs"];
  const json& js = j["states"];
  if (!jp.is_array() || !js.is_array() || jp.size() != js.size()) {
    fail(where, "'probs' and 'states' must be arrays of equal length");
  }
  Eigen::VectorXd probs(static_cast<Eigen::Index>(jp.size()));
  for (std::size_t i = 0; i < jp.size(); ++i) {
    if (!jp[i].is_number()) {
      fail(where, "probs[" + std::to_string(i) + "] is not a number");
    }
    probs[static_cast<Eigen::Index>(i)] = jp[i].get<double>();
  }
  std::vector<Vector> states;
  states.reserve(js.size());
  for (std::size_t i = 0; i < js.size(); ++i) {
    states.push_back(
        parse_state(js[i], where + ".states[" + std::to_string(i) + "]"));
  }
  try {
    return Source(std::move(states), std::move(probs));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

KrausChannel parse_channel(const json& j, const std::string& name) {
  const std::string where = "channel '" + name + "'";
  if (!j.is_object()) {
    fail(where, "expected an object");
  }
  std::string kind = "kraus";
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) {
      fail(where, "'kind' must be a string");
    }
    kind = j["kind"].get<std::string>();
  }
  try {
    if (kind == "kraus") {
      if (!j.contains("ops") || !j["ops"].is_array() || j["ops"].empty()) {
        fail(where, "explicit channels need a non-empty 'ops' array");
      }
      std::vector<Matrix> ops;
      ops.reserve(j["ops"].size());
      for (std::size_t i = 0; i < j["ops"].size(); ++i) {
        ops.push_back(
            parse_matrix(j["ops"][i], where + ".ops[" + std::to_string(i) + "]"));
      }
      if (j.contains("in_dim") &&
          j["in_dim"].get<Eigen::Index>() != ops.front().cols()) {
        fail(where, "declared in_dim does not match the operators");
      }
      if (j.contains("out_dim") &&
          j["out_dim"].get<Eigen::Index>() != ops.front().rows()) {
        fail(where, "declared out_dim does not match the operators");
      }
      return KrausChannel(std::move(ops));
    }
    if (!j.contains("dim") || !j["dim"].is_number_integer()) {
      fail(where, "'" + kind + "' needs an integer 'dim'");
    }
    const Eigen::Index dim = j["dim"].get<Eigen::Index>();
    if (kind == "identity") {
      return identity_channel(dim);
    }
    if (kind == "dephasing") {
      return dephasing_channel(dim);
    }
    if (kind == "depolarizing") {
      if (!j.contains("lambda") || !j["lambda"].is_number()) {
        fail(where, "'depolarizing' needs a numeric 'lambda'");
      }
      return depolarizing_channel(dim, j["lambda"].get<double>());
    }
    fail(where, "unknown kind '" + kind + "'");
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

std::string line_of_byte(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
    }
  }
  return std::to_string(line);
}

} // namespace

ProblemFile parse_problem_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("syntax error at line " + line_of_byte(text, e.byte) +
                          ": " + e.what());
  }
  if (!doc.is_object()) {
    throw ValidationError("problem file: top level must be an object");
  }

  ProblemFile file;
  if (doc.contains("sources")) {
    if (!doc["sources"].is_object()) {
      throw ValidationError("problem file: 'sources' must be an object");
    }
    for (const auto& [name, body] : doc["sources"].items()) {
      file.sources.emplace(name, parse_source(body, name));
    }
  }
  if (doc.contains("channels")) {
    if (!doc["channels"].is_object()) {
      throw ValidationError("problem file: 'channels' must be an object");
    }
    for (const auto& [name, body] : doc["channels"].items()) {
      file.channels.emplace(name, parse_channel(body, name));
    }
  }
  if (doc.contains("jobs")) {
    if (!doc["jobs"].is_array()) {
      throw ValidationError("problem file: 'jobs' must be an array");
    }
    for (std::size_t i = 0; i < doc["jobs"].size(); ++i) {
      const json& jj = doc["jobs"][i];
      const std::string where = "job " + std::to_string(i);
      if (!jj.is_object() || !jj.contains("command") ||
          !jj["command"].is_string()) {
        fail(where, "expected an object with a string 'command'");
      }
      Job job;
      job.command = jj["command"].get<std::string>();
      for (const char* key : {"source", "channel", "encoder", "decoder"}) {
        if (!jj.contains(key)) {
          continue;
        }
        if (!jj[key].is_string()) {
          fail(where, std::string("'") + key + "' must be a string");
        }
        const std::string ref = jj[key].get<std::string>();
        const bool is_source = std::string(key) == "source";
        const bool resolves = is_source ? file.sources.count(ref) > 0
                                        : file.channels.count(ref) > 0;
        if (!resolves) {
          fail(where, std::string("references undefined ") +
                          (is_source ? "source" : "channel") + " \"" + ref +
                          "\"");
        }
        job.refs.emplace(key, ref);
      }
      file.jobs.push_back(std::move(job));
    }
  }
  return file;
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open input file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_file(buffer.str());
}

} // namespace qshannon
