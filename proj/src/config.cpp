#include "sgn/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sgn/core.hpp"

namespace sgn::io {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] void parse_error(const std::string& source, std::size_t line,
                              const std::string& what) {
  std::ostringstream msg;
  msg << source << ":" << line << ": " << what;
  throw Error(ErrorCode::ConfigParse, msg.str());
}

bool valid_key(const std::string& k) {
  if (k.empty()) return false;
  return std::all_of(k.begin(), k.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  });
}

}  // namespace

Config Config::parse(const std::string& text, const std::string& source) {
  Config cfg;
  cfg.source_ = source;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::size_t hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) parse_error(source, line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!valid_key(key)) parse_error(source, line_no, "invalid key '" + key + "'");
    if (cfg.entries_.count(key)) {
      parse_error(source, line_no,
                  "duplicate key '" + key + "' (first set on line " +
                      std::to_string(cfg.entries_[key].line) + ")");
    }
    ConfigEntry e;
    e.line = line_no;
    if (!value.empty() && value.front() == '[') {
      if (value.back() != ']') parse_error(source, line_no, "unterminated list for '" + key + "'");
      e.is_list = true;
      const std::string body = trim(value.substr(1, value.size() - 2));
      if (body.empty()) parse_error(source, line_no, "empty list for '" + key + "'");
      std::istringstream items(body);
      std::string item;
      while (std::getline(items, item, ',')) {
        item = trim(item);
        if (item.empty()) parse_error(source, line_no, "empty list item for '" + key + "'");
        e.items.push_back(item);
      }
      if (body.back() == ',') parse_error(source, line_no, "trailing comma in '" + key + "'");
    } else {
      if (value.empty()) parse_error(source, line_no, "missing value for '" + key + "'");
      if (value.find(']') != std::string::npos) {
        parse_error(source, line_no, "unexpected ']' in value of '" + key + "'");
      }
      e.items.push_back(value);
    }
    cfg.entries_[key] = std::move(e);
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::ConfigParse, path + ": cannot open config file");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), path);
}

bool Config::is_list(const std::string& key) const { return entry(key).is_list; }

const ConfigEntry& Config::entry(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) {
    throw Error(ErrorCode::ConfigParse, source_ + ": missing required key '" + key + "'");
  }
  return it->second;
}

void Config::fail(const ConfigEntry& e, const std::string& key, const std::string& what) const {
  parse_error(source_, e.line, "'" + key + "': " + what);
}

const std::string& Config::scalar(const std::string& key) const {
  const ConfigEntry& e = entry(key);
  if (e.is_list) fail(e, key, "expected a single value, got a list");
  return e.items.front();
}

namespace {

bool to_double(const std::string& s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

bool to_int(const std::string& s, long long& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

}  // namespace

std::string Config::get_string(const std::string& key) const { return scalar(key); }

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  return has(key) ? scalar(key) : fallback;
}

double Config::get_double(const std::string& key) const {
  double v = 0.0;
  if (!to_double(scalar(key), v)) fail(entry(key), key, "not a number: '" + scalar(key) + "'");
  return v;
}

double Config::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

long long Config::get_int(const std::string& key) const {
  long long v = 0;
  if (!to_int(scalar(key), v)) fail(entry(key), key, "not an integer: '" + scalar(key) + "'");
  return v;
}

long long Config::get_int(const std::string& key, long long fallback) const {
  return has(key) ? get_int(key) : fallback;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string& v = scalar(key);
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  fail(entry(key), key, "not a boolean: '" + v + "'");
}

std::vector<double> Config::get_doubles(const std::string& key) const {
  const ConfigEntry& e = entry(key);
  std::vector<double> out;
  for (const auto& item : e.items) {
    double v = 0.0;
    if (!to_double(item, v)) fail(e, key, "not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<double> Config::get_doubles(const std::string& key,
                                        std::vector<double> fallback) const {
  return has(key) ? get_doubles(key) : fallback;
}

std::vector<long long> Config::get_ints(const std::string& key) const {
  const ConfigEntry& e = entry(key);
  std::vector<long long> out;
  for (const auto& item : e.items) {
    long long v = 0;
    if (!to_int(item, v)) fail(e, key, "not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> Config::get_strings(const std::string& key) const {
  return entry(key).items;
}

void Config::reject_unknown(const std::set<std::string>& known) const {
  const ConfigEntry* worst = nullptr;
  std::string name;
  for (const auto& [key, e] : entries_) {
    if (known.count(key)) continue;
    if (!worst || e.line < worst->line) {
      worst = &e;
      name = key;
    }
  }
  if (worst) parse_error(source_, worst->line, "unknown key '" + name + "'");
}

std::vector<std::string> Config::keys() const {
  std::vector<std::string> out;
  for (const auto& kv : entries_) out.push_back(kv.first);
  return out;
}

}  // namespace sgn::io
