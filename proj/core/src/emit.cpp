#include "kgosc/emit.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace kgosc {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

void JsonWriter::pre_value() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!filled_.empty()) {
    if (filled_.back()) out_ += ',';
    filled_.back() = true;
  }
}

void JsonWriter::raw(const std::string& text) { out_ += text; }

JsonWriter& JsonWriter::begin_object() {
  pre_value();
  raw("{");
  filled_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  if (filled_.empty()) throw std::logic_error("json writer: no open container");
  filled_.pop_back();
  raw("}");
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  pre_value();
  raw("[");
  filled_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  if (filled_.empty()) throw std::logic_error("json writer: no open container");
  filled_.pop_back();
  raw("]");
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
  if (filled_.empty()) throw std::logic_error("json writer: key outside object");
  if (filled_.back()) out_ += ',';
  filled_.back() = true;
  raw('"' + json_escape(name) + "\":");
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  pre_value();
  // JSON has no nan/inf literals; emit them as strings so documents stay valid.
  if (std::isnan(v) || std::isinf(v))
    raw('"' + format_double(v) + '"');
  else
    raw(format_double(v));
  return *this;
}

JsonWriter& JsonWriter::value(int v) { return value(static_cast<long long>(v)); }

JsonWriter& JsonWriter::value(long long v) {
  pre_value();
  raw(std::to_string(v));
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  pre_value();
  raw(v ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  pre_value();
  raw('"' + json_escape(v) + '"');
  return *this;
}

JsonWriter& JsonWriter::value(const char* v) { return value(std::string(v)); }

JsonWriter& JsonWriter::null() {
  pre_value();
  raw("null");
  return *this;
}

std::string JsonWriter::str() const {
  if (!filled_.empty()) throw std::logic_error("json writer: unclosed container");
  return out_ + "\n";
}

}  // namespace kgosc
