#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/bigint.hpp"
#include "hecke/budget.hpp"
#include "hecke/permutation.hpp"

namespace hecke {

enum class Action { straight, revert };

std::string to_string(Action action);

struct PermPair {
  Permutation x;
  Permutation y;

  friend bool operator==(const PermPair&, const PermPair&) = default;
  friend std::strong_ordering operator<=>(const PermPair& l, const PermPair& r) {
    if (auto c = l.x <=> r.x; c != 0) return c;
    return l.y <=> r.y;
  }
};

std::string to_string(const PermPair& p);

// straight: (a x b^-1, a y b^-1); revert: (a x b^-1, b y a^-1).
// Throws DomainError unless a, b are in B_n and the pair lives in S_2n.
PermPair act(const PermPair& pair, const Permutation& a, const Permutation& b,
             Action action, int n);

// phi(x, y) = (x, y^-1); carries straightforward orbits onto reverted ones.
PermPair phi(const PermPair& pair);

// Smallest r with both entries fixing every point above 2r.
int pair_rank(const PermPair& pair);

struct OrbitRecord {
  Action action = Action::revert;
  // Lexicographically least member of minimal rank.
  PermPair representative;
  int magnitude = 0;
  int product_weight = 0;
  // Least n at which the orbit meets S_2n x S_2n.
  int min_rank = 0;
  std::map<int, BigInt> size_at;
  // (2^m m!)^2 / |L(m)| at m = magnitude.
  std::optional<BigInt> k_constant;
  // The same quotient taken at m = min_rank.
  std::optional<BigInt> k_min_rank;
};

struct Orbit {
  std::vector<PermPair> members;  // sorted
  OrbitRecord record;
};

// Breadth-first closure of pair under (g, e) and (e, g), g in generators_B(n).
// Degree must be at most 16. Throws ResourceError once the orbit outgrows
// the budget, reporting how many members were found.
Orbit orbit_of(const PermPair& pair, int n, Action action, const Budget& budget = {});

// Orbit size only; no member list is returned.
BigInt orbit_size(const PermPair& pair, int n, Action action, const Budget& budget = {});

enum class Anchor { magnitude, min_rank };

// Fills record.k_constant or record.k_min_rank from a BFS at the anchor and
// returns it. The quotient must be exact (ConsistencyError otherwise).
BigInt extract_k(OrbitRecord& record, Anchor anchor, const Budget& budget = {});

// (2^n n!)^2 / (k 2^{n-r} (n-r)!) with r the anchor rank and k extracted at
// it. UnsupportedRange when n is below the anchor, DomainError when k has
// not been extracted.
BigInt predicted_size(const OrbitRecord& record, int n, Anchor anchor);

enum class Target { full, restricted };

struct OrbitSummary {
  // (x0, y) with x0 = canonical_rep(mu) and y the least fibre element.
  PermPair representative;
  BigInt size;
  int magnitude = 0;
  int product_weight = 0;
};

struct OrbitCount {
  std::vector<OrbitSummary> orbits;
  // |V(n)|: sum of the orbit sizes.
  BigInt total;
  std::size_t count() const { return orbits.size(); }
};

// Reverted B_n x B_n orbits on V(K_mu(n) x K_lambda(n); T), T = K_nu(n) or
// K^{w(nu)}_nu(n). Every orbit meets the slice x = canonical_rep(mu); the
// slice is partitioned under the stabilizer of that point.
OrbitCount count_orbits(const Partition& mu, const Partition& lambda, const Partition& nu,
                        int n, Target target, const Budget& budget = {});

// The same partition by materializing V(n) and running BFS from every
// unvisited pair. Meant for small n.
OrbitCount count_orbits_by_bfs(const Partition& mu, const Partition& lambda,
                               const Partition& nu, int n, Target target,
                               const Budget& budget = {});

// Every pair of V(n), sorted.
std::vector<PermPair> enumerate_V(const Partition& mu, const Partition& lambda,
                                  const Partition& nu, int n, Target target,
                                  const Budget& budget = {});

}  // namespace hecke
