#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hecke/budget.hpp"
#include "hecke/permutation.hpp"

namespace hecke {

// The couple D_i = {2i-1, 2i}.
struct Couple {
  int index;

  int first() const { return 2 * index - 1; }
  int second() const { return 2 * index; }
  bool contains(int k) const { return k == first() || k == second(); }
};

// Partner map t: 2i-1 <-> 2i.
constexpr int partner(int k) { return (k % 2 == 1) ? k + 1 : k - 1; }

constexpr Couple couple_of(int k) { return Couple{(k + 1) / 2}; }

// t_n = (1 2)(3 4)...(2n-1 2n).
Permutation partner_involution(int n);

// True iff x maps every couple of {1..2n} onto a couple. Throws DomainError
// when x moves a point above 2n.
bool is_in_B(const Permutation& x, int n);

// Element of B_n in wreath coordinates: couple i goes to couple
// couple_perm[i-1], swapped when flips[i-1] is set.
Permutation wreath_element(const std::vector<int>& couple_perm,
                           const std::vector<bool>& flips);

// Visits every element of B_n once, ordered by the couple permutation
// (lexicographic) and then by the flip pattern (binary counting, couple 1
// least significant). Throws ResourceError when 2^n n! exceeds the budget
// or n > 8 without budget.force.
void for_each_B(int n, const std::function<void(const Permutation&)>& visit,
                const Budget& budget = {});

std::vector<Permutation> enumerate_B(int n, const Budget& budget = {});

// Couple flips (2i-1 2i) followed by adjacent couple swaps
// (2i-1 2i+1)(2i 2i+2).
std::vector<Permutation> generators_B(int n);

// Uniform element of B_n; deterministic in the seed. Built from a uniform
// permutation of the couples and an independent fair flip per couple.
Permutation random_B(int n, std::uint64_t seed);
Permutation random_B(int n, std::mt19937_64& rng);

}  // namespace hecke
