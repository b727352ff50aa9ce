#include "hecke/coset.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

#include "hecke/errors.hpp"
#include "hecke/hyperoctahedral.hpp"
#include "hecke/packed.hpp"

namespace hecke {

DisjointSet::DisjointSet(int size) : parent_(size), size_(size, 1), sets_(size) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSet::find(int element) {
  while (element != parent_[element]) {
    parent_[element] = parent_[parent_[element]];
    element = parent_[element];
  }
  return element;
}

bool DisjointSet::unite(int left, int right) {
  left = find(left);
  right = find(right);
  if (left == right) return false;
  if (size_[left] < size_[right]) std::swap(left, right);
  parent_[right] = left;
  size_[left] += size_[right];
  --sets_;
  return true;
}

CosetGraph::CosetGraph(const Permutation& x, int n) : x_(x.padded(2 * n)), n_(n) {
  if (x.largest_moved_point() > 2 * n)
    throw DomainError("coset graph: permutation moves a point above 2n");
  const Permutation inv = x_.inverse();
  for (int i = 1; i <= n; ++i) {
    straight_.emplace_back(2 * i - 1, 2 * i);
    curved_.emplace_back(inv(2 * i - 1), inv(2 * i));
  }
}

std::vector<std::vector<int>> CosetGraph::components() const {
  DisjointSet ds(vertex_count() + 1);
  for (auto [u, v] : straight_) ds.unite(u, v);
  for (auto [u, v] : curved_) ds.unite(u, v);
  std::map<int, std::vector<int>> by_root;
  for (int v = 1; v <= vertex_count(); ++v) by_root[ds.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, verts] : by_root) out.push_back(std::move(verts));
  std::sort(out.begin(), out.end());
  return out;
}

Partition CosetGraph::coset_type() const {
  std::vector<int> parts;
  for (const auto& c : components()) parts.push_back(static_cast<int>(c.size()) / 2);
  return Partition::from_unsorted(std::move(parts));
}

Partition coset_type(const Permutation& x, int n) {
  if (x.largest_moved_point() > 2 * n)
    throw DomainError("coset type: permutation moves " +
                      std::to_string(x.largest_moved_point()) + ", beyond 2n = " +
                      std::to_string(2 * n));
  // Contract the straight edges: one node per couple, one edge per curved edge.
  const Permutation inv = x.inverse();
  DisjointSet ds(n);
  for (int i = 1; i <= n; ++i)
    ds.unite((inv(2 * i - 1) - 1) / 2, (inv(2 * i) - 1) / 2);
  std::vector<int> parts;
  for (int c = 0; c < n; ++c)
    if (ds.find(c) == c) parts.push_back(ds.set_size(c));
  return Partition::from_unsorted(std::move(parts));
}

Partition stable_coset_type(const Permutation& x) {
  const int n = std::max((x.largest_moved_point() + 1) / 2, 1);
  return coset_type(x, n).stabilized();
}

BigInt double_coset_size(const Partition& mu, int n) {
  if (mu.weight() > n) return 0;
  std::vector<int> full;
  for (int p : mu.parts()) full.push_back(p + 1);
  full.insert(full.end(), n - mu.weight(), 1);
  const Partition rho = Partition::from_unsorted(std::move(full));
  BigInt z = pow2(rho.length());
  for (int part = 1; part <= n; ++part) {
    const int m = rho.multiplicity(part);
    for (int k = 0; k < m; ++k) z *= part;
    z *= factorial(m);
  }
  const BigInt b = hyperoctahedral_order(n);
  return exact_div(b * b, z, "double coset size");
}

namespace {

std::uint64_t to_u64_saturating(const BigInt& v) {
  return v > BigInt(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(v);
}

}  // namespace

void for_each_K(const Partition& mu, int n, KMode mode,
                const std::function<void(const Permutation&)>& visit,
                const Budget& budget) {
  if (n < 1) throw DomainError("K_mu(n) needs n >= 1");
  if (mu.weight() > n) return;
  if (2 * n > kMaxPackedDegree) throw DomainError("K_mu(n) enumeration supports n <= 8");

  if (mode == KMode::filter) {
    const std::uint64_t target = coset_key_of(mu);
    for_each_permutation(2 * n, budget, [&](const Word& w) {
      if (coset_key(w, n) == target) visit(from_word(w, 2 * n));
    });
    return;
  }

  budget.require(to_u64_saturating(double_coset_size(mu, n)),
                 "closure of K_" + mu.to_string() + "(" + std::to_string(n) + ")");
  std::vector<Word> gens;
  for (const auto& g : generators_B(n)) gens.push_back(to_word(g));
  const Word start = to_word(canonical_rep(mu));
  std::unordered_set<std::uint64_t> seen{pack(start)};
  std::vector<Word> frontier{start};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (const Word& g : gens) {
        for (const Word& cand : {compose(g, w), compose(w, g)}) {
          if (seen.insert(pack(cand)).second) next.push_back(cand);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::uint64_t> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::uint64_t bits : sorted) visit(from_word(unpack(bits), 2 * n));
}

std::vector<Permutation> enumerate_K(const Partition& mu, int n, KMode mode,
                                     const Budget& budget) {
  std::vector<Permutation> out;
  for_each_K(mu, n, mode, [&](const Permutation& x) { out.push_back(x); }, budget);
  return out;
}

std::vector<Permutation> restricted_K(const Partition& mu, int m, int n,
                                      const Budget& budget) {
  std::vector<Permutation> out;
  const int deg = 2 * n;
  if (m < 0 || m > deg || mu.weight() > n || m == 1) return out;
  if (deg > 30) throw DomainError("restricted_K supports n <= 15");

  BigInt choose = 1;
  for (int i = 0; i < m; ++i) choose = choose * (deg - i) / (i + 1);
  budget.require(to_u64_saturating(choose * factorial(m)),
                 "restricted K^" + std::to_string(m) + "_" + mu.to_string() + "(" +
                     std::to_string(n) + ")");

  if (m == 0) {
    if (mu.empty()) out.push_back(Permutation::identity(deg));
    return out;
  }

  // Subsets in increasing order of their bitmask (Gosper's hack).
  std::uint32_t mask = (1u << m) - 1;
  const std::uint32_t limit = 1u << deg;
  std::vector<int> points(m), images(m);
  while (mask < limit) {
    int k = 0;
    for (int p = 0; p < deg; ++p)
      if (mask >> p & 1u) points[k++] = p + 1;
    images = points;
    do {
      bool derangement = true;
      for (int i = 0; i < m && derangement; ++i) derangement = images[i] != points[i];
      if (!derangement) continue;
      std::vector<int> one_line(deg);
      std::iota(one_line.begin(), one_line.end(), 1);
      for (int i = 0; i < m; ++i) one_line[points[i] - 1] = images[i];
      Permutation x(std::move(one_line));
      if (coset_type(x, n).stabilized() == mu) out.push_back(std::move(x));
    } while (std::next_permutation(images.begin(), images.end()));

    const std::uint32_t low = mask & -mask;
    const std::uint32_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation canonical_rep(const Partition& mu) {
  std::vector<std::vector<int>> cycles;
  int start = 1;
  for (int p : mu.parts()) {
    const int len = p + 1;
    std::vector<int> c;
    for (int k = 0; k < len; ++k) c.push_back(start + 2 * k);
    cycles.push_back(std::move(c));
    start += 2 * len;
  }
  const int w = mu.weight();
  Permutation x = Permutation::from_cycles(cycles, std::max(2 * w, 2));
  if (x.support_size() != w || x.largest_moved_point() > 2 * w ||
      coset_type(x, std::max(w, 1)).stabilized() != mu)
    throw ConsistencyError("canonical representative failed its postconditions for " +
                           mu.to_string());
  return x;
}

std::vector<Permutation> conjugacy_class_in_B(const Permutation& x, int n,
                                              const Budget& budget) {
  if (x.largest_moved_point() > 2 * n)
    throw DomainError("conjugacy class: permutation moves a point above 2n");
  const auto gens = generators_B(n);
  const Permutation start = x.padded(2 * n).resized(2 * n);
  std::unordered_set<Permutation, PermutationHash> seen{start};
  std::vector<Permutation> frontier{start};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& y : frontier)
      for (const auto& g : gens) {
        Permutation c = g * y * g;  // generators are involutions
        if (seen.insert(c).second) {
          budget.require(seen.size(), "B_n conjugacy class");
          next.push_back(std::move(c));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

BigInt centralizer_order_in_B(const Permutation& x, int n) {
  if (x.largest_moved_point() > 2 * n)
    throw DomainError("centralizer: permutation moves a point above 2n");
  // Elements of B_n commuting with x are the permutations commuting with
  // both x and t_n. Assign images point by point; each choice forces the
  // images along the x-cycle and of the partner.
  const int deg = 2 * n;
  std::vector<int> img(deg + 1, 0), used(deg + 1, 0), trail;
  auto assign = [&](int p, int q) {
    std::vector<std::pair<int, int>> stack{{p, q}};
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      if (img[a] != 0) {
        if (img[a] != b) return false;
        continue;
      }
      if (used[b]) return false;
      img[a] = b;
      used[b] = 1;
      trail.push_back(a);
      stack.emplace_back(x(a), x(b));
      stack.emplace_back(partner(a), partner(b));
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      used[img[trail.back()]] = 0;
      img[trail.back()] = 0;
      trail.pop_back();
    }
  };
  BigInt count = 0;
  std::function<void(int)> search = [&](int from) {
    int p = from;
    while (p <= deg && img[p] != 0) ++p;
    if (p > deg) {
      ++count;
      return;
    }
    for (int q = 1; q <= deg; ++q) {
      if (used[q]) continue;
      const std::size_t mark = trail.size();
      if (assign(p, q)) search(p + 1);
      undo(mark);
    }
  };
  search(1);
  return count;
}

BigInt centralizer_constant(const Partition& nu) {
  const int w = nu.weight();
  if (w == 0) return 1;
  return centralizer_order_in_B(canonical_rep(nu), w);
}

BigInt restricted_class_size(const Partition& nu, int n) {
  const int w = nu.weight();
  if (n < w) return 0;
  return exact_div(hyperoctahedral_order(n),
                   centralizer_constant(nu) * hyperoctahedral_order(n - w),
                   "restricted class size");
}

}  // namespace hecke
