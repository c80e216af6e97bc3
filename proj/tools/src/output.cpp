#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "btzotto/version.hpp"

namespace btzotto::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return {};
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string{};
}

Table to_table(const Dataset& ds) {
  Table t{ds.columns, {}};
  t.rows.reserve(ds.rows.size());
  for (const auto& r : ds.rows) {
    std::vector<std::string> cells;
    cells.reserve(r.size());
    for (const double v : r) cells.push_back(format_number(v));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

std::string csv_text(const Table& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256: digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

void write_atomically(const std::string& path, const std::string& bytes) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    f.flush();
    if (!f) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename onto '" + path + "': " + ec.message());
  }
}

void write_dataset(const std::string& path, const Table& t, const ParamSet& params) {
  const std::string csv = csv_text(t);
  Json manifest = Json::object();
  manifest["command"] = params.command();
  manifest["version"] = std::string(version());
  manifest["parameters"] = params.resolved();
  manifest["datasets"] = Json::array({Json{{"path", path},
                                           {"sha256", sha256_hex(csv)},
                                           {"rows", t.rows.size()},
                                           {"columns", t.columns}}});
  write_atomically(path, csv);
  write_atomically(path + ".manifest.json", manifest.dump(2) + "\n");
}

}  // namespace btzotto::cli
