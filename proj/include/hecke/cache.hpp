#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hecke/budget.hpp"
#include "hecke/structure_constants.hpp"

namespace hecke {

inline constexpr const char* kToolVersion = HECKE_VERSION;

enum class Format { table, json, csv };
Format parse_format(const std::string& text);

struct RunConfig {
  std::uint64_t budget_elements = Budget::kDefaultElements;
  int shards = 1;
  std::uint64_t seed = 20140601;
  std::string cache_path;
  Format format = Format::table;
  bool force = false;

  Budget budget() const { return Budget{budget_elements, force}; }
  CountOptions count_options() const { return CountOptions{budget(), shards}; }
};

struct CacheRecord {
  StructEntry entry;
  std::string tool_version = kToolVersion;
  std::int64_t wall_ms = 0;

  friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

// One JSON object, keys in the order mu, lambda, nu, n, b, method,
// tool_version, wall_ms; b is a decimal string.
std::string to_json_line(const CacheRecord& record);
// Throws ParseError on malformed input or missing keys.
CacheRecord parse_json_line(const std::string& line);

// -1, 0, 1 comparing dotted numeric versions ("0.10.0" > "0.9.3").
int compare_versions(const std::string& a, const std::string& b);

// Append-only JSON Lines store.
class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  void append(const CacheRecord& record) const;
  // Every record as written, in file order. A missing file reads as empty.
  std::vector<CacheRecord> read_all() const;
  // One record per (mu, lambda, nu, n, method): the newest tool_version,
  // the later line on ties. Sorted by that key.
  std::vector<CacheRecord> load() const;
  std::optional<CacheRecord> find(const Partition& mu, const Partition& lambda,
                                  const Partition& nu, int n, Method method) const;

 private:
  std::string path_;
};

}  // namespace hecke
