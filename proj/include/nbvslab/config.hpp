#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace nbvslab {

/// Flat `key = value` configuration text. Values are JSON literals
/// (numbers, strings, booleans, arrays); '#' starts a comment. Errors
/// carry the 1-based line number.
class FlatConfig {
 public:
  struct Entry {
    nlohmann::json value;
    int line = 0;
  };

  static FlatConfig parse(std::istream& is, const std::string& name) {
    FlatConfig cfg;
    cfg.name_ = name;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw std::runtime_error(name + ":" + std::to_string(lineno) + ": expected key = value");
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      if (key.empty())
        throw std::runtime_error(name + ":" + std::to_string(lineno) + ": empty key");
      if (cfg.entries_.count(key))
        throw std::runtime_error(name + ":" + std::to_string(lineno) + ": duplicate key '" + key +
                                 "'");
      nlohmann::json parsed = nlohmann::json::parse(value, nullptr, false);
      if (parsed.is_discarded())
        throw std::runtime_error(name + ":" + std::to_string(lineno) +
                                 ": value is not a JSON literal: " + value);
      cfg.entries_[key] = Entry{std::move(parsed), lineno};
    }
    return cfg;
  }

  static FlatConfig parse_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error(path + ": cannot open config file");
    return parse(is, path);
  }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  const std::map<std::string, Entry>& entries() const { return entries_; }
  const std::string& name() const { return name_; }

  template <typename T>
  T get(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) throw std::runtime_error(name_ + ": missing key '" + key + "'");
    try {
      return it->second.value.get<T>();
    } catch (const nlohmann::json::exception&) {
      throw std::runtime_error(name_ + ":" + std::to_string(it->second.line) +
                               ": wrong type for key '" + key + "'");
    }
  }

  int line_of(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
  }

 private:
  static std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  }

  std::string name_ = "<config>";
  std::map<std::string, Entry> entries_;
};

}  // namespace nbvslab
