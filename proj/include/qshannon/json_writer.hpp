#pragma once

// Minimal JSON emitter with deterministic output: keys appear in insertion
// order and floating-point values print with 17 significant digits, so a
// given report serializes byte-identically on every run.

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace qshannon {

class JsonWriter {
public:
  JsonWriter& begin_object() {
    prefix();
    out_ += '{';
    stack_.push_back(false);
    return *this;
  }

  JsonWriter& end_object() {
    stack_.pop_back();
    out_ += '}';
    return *this;
  }

  JsonWriter& begin_array() {
    prefix();
    out_ += '[';
    stack_.push_back(false);
    return *this;
  }

  JsonWriter& end_array() {
    stack_.pop_back();
    out_ += ']';
    return *this;
  }

  JsonWriter& key(std::string_view k) {
    prefix();
    append_string(k);
    out_ += ':';
    pending_key_ = true;
    return *this;
  }

  JsonWriter& value(double v) {
    prefix();
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out_ += buf;
    return *this;
  }

  JsonWriter& value(std::int64_t v) {
    prefix();
    out_ += std::to_string(v);
    return *this;
  }

  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(std::uint64_t v) {
    prefix();
    out_ += std::to_string(v);
    return *this;
  }

  JsonWriter& value(bool v) {
    prefix();
    out_ += v ? "true" : "false";
    return *this;
  }

  JsonWriter& value(std::string_view v) {
    prefix();
    append_string(v);
    return *this;
  }

  JsonWriter& value(const char* v) { return value(std::string_view(v)); }

  JsonWriter& null() {
    prefix();
    out_ += "null";
    return *this;
  }

  /// Verbatim pre-serialized JSON (used to embed nested documents).
  JsonWriter& raw(std::string_view json) {
    prefix();
    out_ += json;
    return *this;
  }

  const std::string& str() const { return out_; }
  std::string take() { return std::move(out_); }

private:
  void prefix() {
    if (pending_key_) {
      pending_key_ = false;
      return;
    }
    if (!stack_.empty()) {
      if (stack_.back()) {
        out_ += ',';
      }
      stack_.back() = true;
    }
  }

  void append_string(std::string_view s) {
    out_ += '"';
    for (const char c : s) {
      switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\r': out_ += "\\r"; break;
      case '\t': out_ += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out_ += buf;
        } else {
          out_ += c;
        }
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<bool> stack_; // element-already-written flag per nesting level
  bool pending_key_ = false;
};

} // namespace qshannon
