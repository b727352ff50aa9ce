#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hecke/bigint.hpp"
#include "hecke/budget.hpp"
#include "hecke/permutation.hpp"

namespace hecke {

class DisjointSet {
 public:
  explicit DisjointSet(int size);

  int find(int element);
  // Returns false when both were already in one set.
  bool unite(int left, int right);
  int set_size(int element) { return size_[find(element)]; }
  int count() const { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_;
};

// Explicit graph Gamma_x on the vertices v_i = (i, x(i)), i in [2n].
// Straight edges join v_{2i-1} and v_{2i}; curved edges join
// v_{x^-1(2i-1)} and v_{x^-1(2i)}. Vertices are numbered 1..2n.
//
// Counting passes never build this; it is kept as the literal reading of
// the definition and cross-checked against coset_type.
class CosetGraph {
 public:
  CosetGraph(const Permutation& x, int n);

  int vertex_count() const { return 2 * n_; }
  std::pair<int, int> label(int vertex) const { return {vertex, x_(vertex)}; }
  const std::vector<std::pair<int, int>>& straight_edges() const { return straight_; }
  const std::vector<std::pair<int, int>>& curved_edges() const { return curved_; }

  // Vertex sets of the connected components, each sorted, ordered by their
  // smallest vertex.
  std::vector<std::vector<int>> components() const;

  // Half the component sizes, sorted decreasingly.
  Partition coset_type() const;

 private:
  Permutation x_;
  int n_;
  std::vector<std::pair<int, int>> straight_;
  std::vector<std::pair<int, int>> curved_;
};

// mu_(x): partition of n. Throws DomainError if x moves a point above 2n.
Partition coset_type(const Permutation& x, int n);

// mu_x: the coset type with one removed from every part; independent of
// the padding.
Partition stable_coset_type(const Permutation& x);

enum class KMode { filter, closure };

// Visits K_mu(n) = {x in S_2n : mu_x = mu}. filter scans S_2n; closure
// grows the double coset of canonical_rep(mu) under left and right
// multiplication by generators_B(n). Nothing is visited when w(mu) > n.
void for_each_K(const Partition& mu, int n, KMode mode,
                const std::function<void(const Permutation&)>& visit,
                const Budget& budget = {});

std::vector<Permutation> enumerate_K(const Partition& mu, int n,
                                     KMode mode = KMode::filter,
                                     const Budget& budget = {});

// K^m_mu(n): the members of K_mu(n) moving exactly m points. Built by
// choosing the m moved points and a derangement of them, then filtering on
// the stable coset type.
std::vector<Permutation> restricted_K(const Partition& mu, int m, int n,
                                      const Budget& budget = {});

// Product of cycles on consecutive odd integers, of lengths mu_i + 1:
// (1 3 .. 2l_1-1)(2l_1+1 .. 2(l_1+l_2)-1)... Moves w(mu) points, all of
// them odd, and has stable coset type mu. Postconditions are checked.
Permutation canonical_rep(const Partition& mu);

// Every conjugate a x a^-1, a in B_n, by breadth-first search over
// generators_B(n).
std::vector<Permutation> conjugacy_class_in_B(const Permutation& x, int n,
                                               const Budget& budget = {});

// Order of {b in B_n : b x = x b}, by backtracking over images.
BigInt centralizer_order_in_B(const Permutation& x, int n);

// k_nu: order of the centralizer of canonical_rep(nu) in B_{w(nu)}.
BigInt centralizer_constant(const Partition& nu);

// |K^{w(nu)}_nu(n)| = 2^n n! / (k_nu 2^{n-w} (n-w)!), 0 when n < w(nu).
BigInt restricted_class_size(const Partition& nu, int n);

// |K_mu(n)| = |B_n|^2 / (2^l z_rho) where rho is the full coset type
// (mu + 1) u 1^{n - w(mu)}; 0 when w(mu) > n.
BigInt double_coset_size(const Partition& mu, int n);

}  // namespace hecke
