#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "sosinv/util.hpp"

namespace sosinv {

// Streaming JSON writer with insertion-ordered keys and doubles pinned to
// 17 significant digits, so equal inputs serialize byte-identically.
// Parsing is done with nlohmann::json; this class only writes.
class JsonWriter {
 public:
  std::string take() { return std::move(out_); }

  JsonWriter& begin_object() {
    comma();
    out_ += '{';
    stack_.push_back(false);
    return *this;
  }
  JsonWriter& end_object() {
    out_ += '}';
    stack_.pop_back();
    return *this;
  }
  JsonWriter& begin_array() {
    comma();
    out_ += '[';
    stack_.push_back(false);
    return *this;
  }
  JsonWriter& end_array() {
    out_ += ']';
    stack_.pop_back();
    return *this;
  }
  JsonWriter& key(const std::string& k) {
    comma();
    write_string(k);
    out_ += ':';
    pending_value_ = true;
    return *this;
  }
  JsonWriter& value(double v) {
    comma();
    if (std::isinf(v)) {
      write_string(v > 0 ? "inf" : "-inf");
    } else {
      out_ += format_double(v);
    }
    return *this;
  }
  JsonWriter& value(int v) {
    comma();
    out_ += std::to_string(v);
    return *this;
  }
  JsonWriter& value(std::int64_t v) {
    comma();
    out_ += std::to_string(v);
    return *this;
  }
  JsonWriter& value(bool v) {
    comma();
    out_ += v ? "true" : "false";
    return *this;
  }
  JsonWriter& value(const std::string& v) {
    comma();
    write_string(v);
    return *this;
  }
  JsonWriter& value(const char* v) { return value(std::string(v)); }
  // Splices pre-serialized JSON as one value.
  JsonWriter& raw(const std::string& json) {
    comma();
    out_ += json;
    return *this;
  }

 private:
  void comma() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!stack_.empty() && stack_.back()) out_ += ',';
    if (!stack_.empty()) stack_.back() = true;
  }
  void write_string(const std::string& s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default: out_ += c;
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<bool> stack_;  // "already has an element" per nesting level
  bool pending_value_ = false;
};

}  // namespace sosinv
