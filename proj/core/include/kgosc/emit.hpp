#pragma once

#include <string>
#include <vector>

namespace kgosc {

// Shortest 17-significant-digit decimal form, C locale semantics ('.' radix,
// no grouping). Used for every number the tools print so repeated runs are
// byte-identical and values round-trip through parsing.
std::string format_double(double v);

// Minimal streaming JSON writer with insertion-ordered keys and
// format_double for every real number. The vendored parser is fine for
// reading configs but does not give byte-level control on output, which the
// determinism contract needs.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& name);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(long long v);
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v);
  JsonWriter& null();

  // Finished document plus trailing newline.
  std::string str() const;

 private:
  void pre_value();
  void raw(const std::string& text);

  std::string out_;
  // true = container already holds at least one element
  std::vector<bool> filled_;
  bool pending_key_ = false;
};

std::string json_escape(const std::string& s);

}  // namespace kgosc
