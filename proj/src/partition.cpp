#include "hecke/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase_if(parts, [](int p) { return p == 0; });
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  text.remove_prefix(first);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text == "-" || text == "()" || text == "0") return {};
  if (text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);

  std::vector<int> parts;
  std::size_t i = 0;
  while (i <= text.size()) {
    auto comma = text.find(',', i);
    auto tok = text.substr(i, comma == std::string_view::npos ? text.npos : comma - i);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw ParseError("empty part in partition");
    int v = 0;
    for (char ch : tok) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError("non-digit in partition part '" + std::string(tok) + "'");
      v = v * 10 + (ch - '0');
      if (v > 100000) throw ParseError("partition part too large");
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    i = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::union_with(const Partition& other) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return from_unsorted(std::move(all));
}

Partition Partition::sum_with(const Partition& other) const {
  std::vector<int> out(std::max(parts_.size(), other.parts_.size()), 0);
  for (std::size_t i = 0; i < parts_.size(); ++i) out[i] += parts_[i];
  for (std::size_t i = 0; i < other.parts_.size(); ++i) out[i] += other.parts_[i];
  return Partition(std::move(out));
}

Partition Partition::difference(const Partition& other) const {
  std::vector<int> rest = parts_;
  for (int p : other.parts_) {
    auto it = std::find(rest.begin(), rest.end(), p);
    if (it == rest.end())
      throw DomainError(other.to_string() + " is not contained in " + to_string());
    rest.erase(it);
  }
  return Partition(std::move(rest));
}

Partition Partition::completion(int n) const {
  if (n < size())
    throw DomainError("completion needs n >= |lambda| = " + std::to_string(size()));
  std::vector<int> out = parts_;
  out.insert(out.end(), n - size(), 1);
  return from_unsorted(std::move(out));
}

Partition Partition::stabilized() const {
  std::vector<int> out;
  for (int p : parts_)
    if (p > 1) out.push_back(p - 1);
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  return "(" + to_compact() + ")";
}

std::string Partition::to_compact() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.to_string();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_with_weight_at_most(int w) {
  std::vector<Partition> out;
  for (int weight = 0; weight <= w; ++weight)
    for (int size = 0; size <= weight; ++size)
      for (const auto& p : partitions_of(size))
        if (p.weight() == weight) out.push_back(p);
  return out;
}

}  // namespace hecke
