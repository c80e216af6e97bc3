#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "btzotto/optimizer.hpp"

namespace btzotto::cli {

using Json = nlohmann::ordered_json;

/// Bad command line or configuration; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class KeyType { Number, Integer, String, IntList, Grid };

struct KeyInfo {
  std::string key;   ///< name in config files and manifests
  std::string flag;  ///< long flag, without the dashes
  KeyType type;
  std::string help;
};

[[nodiscard]] const std::vector<KeyInfo>& key_table();
[[nodiscard]] const KeyInfo& key_info(std::string_view key);

/// Parameter set under construction. Keys are merged layer by layer
/// (defaults, config file, flags); later layers win.
class ParamSet {
 public:
  ParamSet(std::string command, std::vector<std::string> allowed);

  void set_default(const std::string& key, Json value);
  /// Config file layer; `origin` names the file in diagnostics.
  void merge_file(const Json& obj, const std::string& origin);
  /// Flag layer, raw text as typed on the command line.
  void merge_flag(const std::string& key, const std::string& text);

  [[nodiscard]] bool has(const std::string& key) const { return values_.contains(key); }
  [[nodiscard]] bool explicit_key(const std::string& key) const { return explicit_.count(key) > 0; }
  void erase(const std::string& key) { values_.erase(key); }
  void set(const std::string& key, Json value) { values_[key] = std::move(value); }

  [[nodiscard]] double number(const std::string& key) const;
  [[nodiscard]] int integer(const std::string& key) const;
  [[nodiscard]] std::string string(const std::string& key) const;
  [[nodiscard]] std::vector<int> int_list(const std::string& key) const;
  [[nodiscard]] Grid grid(const std::string& key) const;

  /// Resolved values in a stable key order (the key table's).
  [[nodiscard]] Json resolved() const;
  [[nodiscard]] const std::string& command() const { return command_; }

 private:
  void check_allowed(const std::string& key, const std::string& origin) const;
  [[nodiscard]] const Json& at(const std::string& key) const;

  std::string command_;
  std::vector<std::string> allowed_;
  Json values_ = Json::object();
  std::set<std::string> explicit_;
};

/// Reads a flat JSON object; UsageError on I/O or syntax problems.
[[nodiscard]] Json load_config_file(const std::string& path);

/// Checks a value against its key type; returns the canonical form
/// (grids become [start, stop, count]). UsageError names `where`.
[[nodiscard]] Json canonical_value(const KeyInfo& info, const Json& v, const std::string& where);

}  // namespace btzotto::cli
