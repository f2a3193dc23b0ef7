#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace sgn::io {

// Flat key = value text. Lists are written `key = [a, b, c]`; `#` starts a
// comment; keys may not repeat. Parse and conversion errors throw
// Error(ConfigParse) with "<source>:<line>: ..." prefixes.
struct ConfigEntry {
  std::vector<std::string> items;
  bool is_list = false;
  std::size_t line = 0;
};

class Config {
 public:
  static Config parse(const std::string& text, const std::string& source = "<config>");
  static Config load(const std::string& path);

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  bool is_list(const std::string& key) const;
  const std::string& source() const { return source_; }

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key) const;
  long long get_int(const std::string& key, long long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  // A scalar is accepted as a one-element list.
  std::vector<double> get_doubles(const std::string& key) const;
  std::vector<double> get_doubles(const std::string& key, std::vector<double> fallback) const;
  std::vector<long long> get_ints(const std::string& key) const;
  std::vector<std::string> get_strings(const std::string& key) const;

  // Throws for keys outside `known`, naming the line of the first offender.
  void reject_unknown(const std::set<std::string>& known) const;
  std::vector<std::string> keys() const;

 private:
  const ConfigEntry& entry(const std::string& key) const;
  const std::string& scalar(const std::string& key) const;
  [[noreturn]] void fail(const ConfigEntry& e, const std::string& key,
                         const std::string& what) const;

  std::string source_;
  std::map<std::string, ConfigEntry> entries_;
};

}  // namespace sgn::io
