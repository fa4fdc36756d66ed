#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bornsim::cli {

// %.17g: enough digits to round-trip any double, and byte-stable across
// runs. All emitted numbers go through these helpers; iostream formatting
// is deliberately avoided.
std::string format_double(double v);
std::string format_double_compact(double v);  // %.6g, for plot coordinates

// JSON emitter with explicit key order and format_double numbers. The
// usual JSON libraries print doubles in shortest-round-trip form, which
// breaks the fixed 17-significant-digit output contract, so this stays
// hand-rolled.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(std::string_view v);
  JsonWriter& null();

  JsonWriter& key_value(std::string_view k, double v) { return key(k).value(v); }
  JsonWriter& key_value(std::string_view k, int v) { return key(k).value(v); }
  JsonWriter& key_value(std::string_view k, std::int64_t v) { return key(k).value(v); }
  JsonWriter& key_value(std::string_view k, std::uint64_t v) { return key(k).value(v); }
  JsonWriter& key_value(std::string_view k, std::string_view v) { return key(k).value(v); }

  JsonWriter& double_array(std::string_view k, const std::vector<double>& vs);

  // Finished document, newline terminated.
  std::string take();

 private:
  void separate();
  void indent();

  std::string out_;
  std::vector<bool> has_items_;
  bool pending_key_ = false;
};

// Writes bytes as-is (binary mode, LF endings preserved). Throws
// std::runtime_error on I/O failure.
void write_file(const std::string& path, std::string_view content);

}  // namespace bornsim::cli
