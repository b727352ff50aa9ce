#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/partition.hpp"

namespace hecke {

// A bijection of {1..degree}. Points above the degree are fixed, so two
// permutations of different degree compare equal when they agree after
// padding the shorter one with fixed points.
//
// Composition convention: (x * y)(i) = x(y(i)); the right factor acts first.
class Permutation {
 public:
  Permutation() : images_{1} {}

  // One-line form, 1-based: images[i-1] = x(i). Throws DomainError unless
  // the values form a bijection of {1..images.size()}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree = 1);

  // Product of disjoint cycles. The degree is the larger of `degree` and
  // the largest point mentioned.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles,
                                 int degree = 0);

  // Accepts cycle form "(1 3 5)(2 4)", "()" for the identity, or one-line
  // form "3 2 5 4 1". Throws ParseError.
  static Permutation parse(std::string_view text);

  int degree() const { return static_cast<int>(images_.size()); }

  int operator()(int i) const {
    return (i >= 1 && i <= degree()) ? images_[i - 1] : i;
  }

  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  Permutation padded(int degree) const;
  // Pads or truncates to exactly `degree`; truncation must drop only fixed
  // points (DomainError otherwise).
  Permutation resized(int degree) const;

  // Largest i with x(i) != i, or 0 for the identity.
  int largest_moved_point() const;
  bool is_identity() const { return largest_moved_point() == 0; }

  // Number of points moved, |S(x)|.
  int support_size() const;

  // Nontrivial cycles, each starting at its minimal element, sorted by
  // that element.
  std::vector<std::vector<int>> cycles() const;

  std::string to_string() const;

  friend Permutation operator*(const Permutation& x, const Permutation& y);
  friend bool operator==(const Permutation& x, const Permutation& y);
  // Lexicographic on one-line images after padding to a common degree.
  friend std::strong_ordering operator<=>(const Permutation& x,
                                          const Permutation& y);

 private:
  std::vector<int> images_;
};

inline Permutation compose(const Permutation& x, const Permutation& y) {
  return x * y;
}

inline std::vector<std::vector<int>> cycle_decomposition(const Permutation& x) {
  return x.cycles();
}

// lambda_x: cycle lengths minus one over the nontrivial cycles.
Partition stable_cycle_type(const Permutation& x);

// x in C_lambda(n). Throws DomainError if x.degree() > n.
bool in_conjugacy_class(const Permutation& x, const Partition& lambda, int n);

std::ostream& operator<<(std::ostream& os, const Permutation& x);

struct PermutationHash {
  std::size_t operator()(const Permutation& x) const;
};

}  // namespace hecke
