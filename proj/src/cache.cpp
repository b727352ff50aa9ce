#include "hecke/cache.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "hecke/errors.hpp"

namespace hecke {

Format parse_format(const std::string& text) {
  if (text == "table") return Format::table;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw ParseError("unknown format '" + text + "'");
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parts_json(const Partition& p) { return ordered_json(p.parts()); }

Partition parts_from(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError(std::string("cache record: '") + key + "' must be an array");
  std::vector<int> parts;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) throw ParseError("cache record: non-integer part");
    parts.push_back(v.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(std::string("cache record: ") + e.what());
  }
}

std::vector<int> version_fields(const std::string& v) {
  std::vector<int> out;
  std::istringstream in(v);
  std::string field;
  while (std::getline(in, field, '.')) {
    try {
      out.push_back(std::stoi(field));
    } catch (const std::exception&) {
      out.push_back(0);
    }
  }
  return out;
}

}  // namespace

std::string to_json_line(const CacheRecord& record) {
  ordered_json j;
  j["mu"] = parts_json(record.entry.mu);
  j["lambda"] = parts_json(record.entry.lambda);
  j["nu"] = parts_json(record.entry.nu);
  j["n"] = record.entry.n;
  j["b"] = to_decimal(record.entry.b);
  j["method"] = to_string(record.entry.method);
  j["tool_version"] = record.tool_version;
  j["wall_ms"] = record.wall_ms;
  return j.dump();
}

CacheRecord parse_json_line(const std::string& line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cache record: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("cache record: not an object");
  for (const char* key : {"n", "b", "method", "tool_version", "wall_ms"})
    if (!j.contains(key)) throw ParseError(std::string("cache record: missing '") + key + "'");
  CacheRecord r;
  r.entry.mu = parts_from(j, "mu");
  r.entry.lambda = parts_from(j, "lambda");
  r.entry.nu = parts_from(j, "nu");
  if (!j["n"].is_number_integer() || !j["b"].is_string() || !j["method"].is_string() ||
      !j["tool_version"].is_string() || !j["wall_ms"].is_number_integer())
    throw ParseError("cache record: field of the wrong type");
  r.entry.n = j["n"].get<int>();
  const std::string b = j["b"].get<std::string>();
  if (b.empty() || b.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("cache record: b must be a decimal string");
  r.entry.b = BigInt(b);
  r.entry.method = parse_method(j["method"].get<std::string>());
  r.tool_version = j["tool_version"].get<std::string>();
  r.wall_ms = j["wall_ms"].get<std::int64_t>();
  return r;
}

int compare_versions(const std::string& a, const std::string& b) {
  auto va = version_fields(a), vb = version_fields(b);
  const std::size_t len = std::max(va.size(), vb.size());
  va.resize(len, 0);
  vb.resize(len, 0);
  if (va < vb) return -1;
  if (vb < va) return 1;
  return 0;
}

void ResultCache::append(const CacheRecord& record) const {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file " + path_);
  out << to_json_line(record) << '\n';
}

std::vector<CacheRecord> ResultCache::read_all() const {
  std::vector<CacheRecord> out;
  std::ifstream in(path_);
  if (!in) return out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_json_line(line));
    } catch (const ParseError& e) {
      throw ParseError(path_ + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::vector<CacheRecord> ResultCache::load() const {
  using Key = std::tuple<Partition, Partition, Partition, int, int>;
  std::map<Key, CacheRecord> newest;
  for (auto& r : read_all()) {
    const Key key{r.entry.mu, r.entry.lambda, r.entry.nu, r.entry.n,
                  static_cast<int>(r.entry.method)};
    auto it = newest.find(key);
    if (it == newest.end())
      newest.emplace(key, std::move(r));
    else if (compare_versions(r.tool_version, it->second.tool_version) >= 0)
      it->second = std::move(r);
  }
  std::vector<CacheRecord> out;
  for (auto& [key, r] : newest) out.push_back(std::move(r));
  return out;
}

std::optional<CacheRecord> ResultCache::find(const Partition& mu, const Partition& lambda,
                                             const Partition& nu, int n,
                                             Method method) const {
  for (auto& r : load())
    if (r.entry.mu == mu && r.entry.lambda == lambda && r.entry.nu == nu && r.entry.n == n &&
        r.entry.method == method)
      return r;
  return std::nullopt;
}

}  // namespace hecke
