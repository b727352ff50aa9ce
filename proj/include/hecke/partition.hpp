#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

// Weakly decreasing sequence of positive integers; empty is the empty
// partition. Length l, size |.|, weight w = l + |.|.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  // Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  // Sorts decreasingly and drops zeros.
  static Partition from_unsorted(std::vector<int> parts);

  // "3,2,1", or "-" / "" for the empty partition. Throws ParseError.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int weight() const { return length() + size(); }
  int multiplicity(int part) const;

  // Multiset union.
  Partition union_with(const Partition& other) const;
  // Componentwise sum after zero-padding.
  Partition sum_with(const Partition& other) const;
  // Multiset difference; throws DomainError unless other is contained.
  Partition difference(const Partition& other) const;
  // lambda(n) = lambda u (1^{n-|lambda|}); throws DomainError if n < |lambda|.
  Partition completion(int n) const;
  // Subtract one from every part and drop the zeros.
  Partition stabilized() const;

  // "(3,2,1)"; the empty partition prints as "-".
  std::string to_string() const;
  // "3,2,1" / "-": the command-line syntax.
  std::string to_compact() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

// All partitions with weight <= w, sorted by weight then reverse lex.
std::vector<Partition> partitions_with_weight_at_most(int w);

}  // namespace hecke
