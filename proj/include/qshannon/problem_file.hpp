#pragma once

// Problem documents: named sources and channels plus a list of command
// specs referencing them. Parsing validates every invariant up front with
// diagnostics anchored to the line (syntax) or the object name (semantics).

#include <map>
#include <string>
#include <vector>

#include "qshannon/channels.hpp"
#include "qshannon/states.hpp"

namespace qshannon {

struct Job {
  std::string command;
  // Reference fields actually present in the document, e.g. "source" -> "s".
  std::map<std::string, std::string> refs;
};

struct ProblemFile {
  std::map<std::string, Source> sources;
  std::map<std::string, KrausChannel> channels;
  std::vector<Job> jobs;
};

/// Parse a UTF-8 problem document. Complex scalars are [re, im] pairs (bare
/// reals are accepted), matrices are row-major nested arrays, states are
/// arrays of complex scalars. Channels are either explicit Kraus sets
/// ({"kind":"kraus","ops":[...]}) or standard constructors
/// (identity/dephasing/depolarizing with "dim" and, where needed, "lambda").
ProblemFile parse_problem_file(const std::string& text);

/// Load and parse a problem file from disk.
ProblemFile load_problem_file(const std::string& path);

} // namespace qshannon
