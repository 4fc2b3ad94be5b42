#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tcsde {

/// Flat, human-readable experiment configuration: one `key = value` per
/// line, '#' comments, every key carries a documented default, unknown keys
/// rejected. Serialization is sorted and lossless, so a written config
/// reproduces the run byte for byte.
class RunConfig {
 public:
  /// All keys with their defaults and one-line descriptions.
  struct KeySpec {
    std::string default_value;
    std::string description;
  };

  RunConfig();  // defaults only

  static RunConfig from_file(const std::string& path);
  static const std::map<std::string, KeySpec>& schema();

  /// Throws std::invalid_argument on unknown keys.
  void set(const std::string& key, const std::string& value);
  bool is_default(const std::string& key) const;

  const std::string& get(const std::string& key) const;
  double get_double(const std::string& key) const;
  int get_int(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  bool get_bool(const std::string& key) const;

  /// Sorted `key = value` lines; parsing the result reproduces *this.
  std::string serialize() const;

 private:
  std::map<std::string, std::string> values_;
};

/// Parses the serialized form from a string (used by from_file and tests).
RunConfig parse_config(const std::string& text);

}  // namespace tcsde
