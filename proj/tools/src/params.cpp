#include "params.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace btzotto::cli {

const std::vector<KeyInfo>& key_table() {
  static const std::vector<KeyInfo> table{
      {"kind", "kind", KeyType::String,
       "sweep kind: rate_vs_T, work_vs_tau_h, coolpower_vs_tau_c, emp_vs_ratio, cop_vs_ratio, "
       "custom_grid"},
      {"variable", "variable", KeyType::String,
       "custom_grid variable: omega_h, omega_c, tau_h, tau_c, Th, Tc"},
      {"grid", "grid", KeyType::Grid, "linear grid start:stop:count"},
      {"mass", "mass", KeyType::Number, "BTZ mass M"},
      {"zeta", "zeta", KeyType::Integer, "boundary condition: -1 Neumann, 0 transparent, 1 Dirichlet"},
      {"zeta_list", "zeta-list", KeyType::IntList, "comma separated boundary conditions"},
      {"omega", "omega", KeyType::Number, "detector gap"},
      {"T", "T", KeyType::Number, "local KMS temperature"},
      {"radius", "radius", KeyType::Number, "detector radius r > sqrt(M), sets the temperature"},
      {"omega_c", "omega-c", KeyType::Number, "gap on the cold isochore"},
      {"omega_h", "omega-h", KeyType::Number, "gap on the hot isochore"},
      {"Th", "Th", KeyType::Number, "hot bath temperature"},
      {"Tc", "Tc", KeyType::Number, "cold bath temperature"},
      {"tau_h", "tau-h", KeyType::Number, "hot stroke duration"},
      {"tau_c", "tau-c", KeyType::Number, "cold stroke duration"},
      {"entropy_convention", "entropy-convention", KeyType::String, "standard or paper"},
      {"nmax", "nmax", KeyType::Integer, "image sum cap"},
      {"term_tol", "term-tol", KeyType::Number, "image sum truncation tolerance"},
      {"gap_tol", "gap-tol", KeyType::Number, "optimizer bracket tolerance"},
      {"prescan", "prescan", KeyType::Integer, "optimizer pre-scan points"},
  };
  return table;
}

const KeyInfo& key_info(std::string_view key) {
  const auto& t = key_table();
  const auto it = std::find_if(t.begin(), t.end(), [&](const KeyInfo& k) { return k.key == key; });
  if (it == t.end()) throw UsageError("unknown key '" + std::string(key) + "'");
  return *it;
}

namespace {

double parse_double(const std::string& text, const std::string& where) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end) throw UsageError(where + ": '" + text + "' is not a number");
  return v;
}

int parse_int(const std::string& text, const std::string& where) {
  int v = 0;
  const char* end = text.data() + text.size();
  const auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end) throw UsageError(where + ": '" + text + "' is not an integer");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Json grid_from_text(const std::string& text, const std::string& where) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError(where + ": expected start:stop:count, got '" + text + "'");
  return Json::array({parse_double(parts[0], where), parse_double(parts[1], where),
                      parse_int(parts[2], where)});
}

}  // namespace

Json canonical_value(const KeyInfo& info, const Json& v, const std::string& where) {
  switch (info.type) {
    case KeyType::Number:
      if (!v.is_number()) throw UsageError(where + ": expected a number");
      return v.get<double>();
    case KeyType::Integer:
      if (!v.is_number_integer()) throw UsageError(where + ": expected an integer");
      return v.get<int>();
    case KeyType::String:
      if (!v.is_string()) throw UsageError(where + ": expected a string");
      return v;
    case KeyType::IntList: {
      if (!v.is_array()) throw UsageError(where + ": expected an array of integers");
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_integer()) {
          throw UsageError(where + "[" + std::to_string(i) + "]: expected an integer");
        }
      }
      return v;
    }
    case KeyType::Grid: {
      if (v.is_string()) return grid_from_text(v.get<std::string>(), where);
      if (!v.is_array() || v.size() != 3) {
        throw UsageError(where + ": expected [start, stop, count] or \"start:stop:count\"");
      }
      if (!v[0].is_number()) throw UsageError(where + "[0]: expected a number");
      if (!v[1].is_number()) throw UsageError(where + "[1]: expected a number");
      if (!v[2].is_number_integer()) throw UsageError(where + "[2]: expected an integer");
      return Json::array({v[0].get<double>(), v[1].get<double>(), v[2].get<int>()});
    }
  }
  return v;
}

ParamSet::ParamSet(std::string command, std::vector<std::string> allowed)
    : command_(std::move(command)), allowed_(std::move(allowed)) {}

void ParamSet::check_allowed(const std::string& key, const std::string& origin) const {
  if (std::find(allowed_.begin(), allowed_.end(), key) == allowed_.end()) {
    throw UsageError(origin + ": key '" + key + "' is not accepted by '" + command_ + "'");
  }
}

void ParamSet::set_default(const std::string& key, Json value) {
  values_[key] = canonical_value(key_info(key), value, key);
}

void ParamSet::merge_file(const Json& obj, const std::string& origin) {
  if (!obj.is_object()) throw UsageError(origin + ": top level must be a JSON object");
  for (const auto& [key, v] : obj.items()) {
    const auto& t = key_table();
    if (std::none_of(t.begin(), t.end(), [&](const KeyInfo& k) { return k.key == key; })) {
      throw UsageError(origin + ": unknown key '" + key + "'");
    }
    check_allowed(key, origin);
    values_[key] = canonical_value(key_info(key), v, origin + ": " + key);
    explicit_.insert(key);
  }
}

void ParamSet::merge_flag(const std::string& key, const std::string& text) {
  const KeyInfo& info = key_info(key);
  const std::string where = "--" + info.flag;
  check_allowed(key, where);
  Json v;
  switch (info.type) {
    case KeyType::Number: v = parse_double(text, where); break;
    case KeyType::Integer: v = parse_int(text, where); break;
    case KeyType::String: v = text; break;
    case KeyType::IntList: {
      v = Json::array();
      for (const auto& part : split(text, ',')) v.push_back(parse_int(part, where));
      break;
    }
    case KeyType::Grid: v = grid_from_text(text, where); break;
  }
  values_[key] = std::move(v);
  explicit_.insert(key);
}

const Json& ParamSet::at(const std::string& key) const {
  if (!values_.contains(key)) throw UsageError(command_ + ": missing required parameter '" + key + "'");
  return values_.at(key);
}

double ParamSet::number(const std::string& key) const {
  const double v = at(key).get<double>();
  if (!std::isfinite(v)) throw UsageError(key + ": must be finite");
  return v;
}

int ParamSet::integer(const std::string& key) const { return at(key).get<int>(); }

std::string ParamSet::string(const std::string& key) const { return at(key).get<std::string>(); }

std::vector<int> ParamSet::int_list(const std::string& key) const {
  return at(key).get<std::vector<int>>();
}

Grid ParamSet::grid(const std::string& key) const {
  const Json& g = at(key);
  return Grid{g[0].get<double>(), g[1].get<double>(), g[2].get<int>()};
}

Json ParamSet::resolved() const {
  Json out = Json::object();
  for (const auto& k : key_table()) {
    if (values_.contains(k.key)) out[k.key] = values_.at(k.key);
  }
  return out;
}

Json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--config: cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": invalid JSON (" + e.what() + ")");
  }
}

}  // namespace btzotto::cli
