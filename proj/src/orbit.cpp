#include "hecke/orbit.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "hecke/coset.hpp"
#include "hecke/errors.hpp"
#include "hecke/hyperoctahedral.hpp"
#include "hecke/packed.hpp"
#include "hecke/supports.hpp"

namespace hecke {

std::string to_string(Action action) {
  return action == Action::straight ? "straight" : "revert";
}

std::string to_string(const PermPair& p) {
  return "(" + p.x.to_string() + ", " + p.y.to_string() + ")";
}

PermPair act(const PermPair& pair, const Permutation& a, const Permutation& b,
             Action action, int n) {
  if (!is_in_B(a, n) || !is_in_B(b, n))
    throw DomainError("act: multipliers must lie in B_" + std::to_string(n));
  if (pair.x.largest_moved_point() > 2 * n || pair.y.largest_moved_point() > 2 * n)
    throw DomainError("act: pair moves a point above 2n");
  const Permutation a_inv = a.inverse(), b_inv = b.inverse();
  if (action == Action::straight) return {a * pair.x * b_inv, a * pair.y * b_inv};
  return {a * pair.x * b_inv, b * pair.y * a_inv};
}

PermPair phi(const PermPair& pair) { return {pair.x, pair.y.inverse()}; }

int pair_rank(const PermPair& pair) {
  const int top = std::max(pair.x.largest_moved_point(), pair.y.largest_moved_point());
  return (top + 1) / 2;
}

namespace {

struct Key {
  std::uint64_t x, y;
  friend bool operator==(const Key&, const Key&) = default;
  friend auto operator<=>(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = k.x * 0x9E3779B97F4A7C15ull;
    h ^= k.y + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

void require_packable(int n, const char* where) {
  if (2 * n > kMaxPackedDegree)
    throw DomainError(std::string(where) + ": supports n <= 8");
}

std::vector<Word> generator_words(int n) {
  std::vector<Word> out;
  for (const auto& g : generators_B(n)) out.push_back(to_word(g));
  return out;
}

// Generators are involutions, so g^-1 = g throughout.
std::unordered_set<Key, KeyHash> bfs(const PermPair& pair, int n, Action action,
                                     const Budget& budget) {
  require_packable(n, "orbit BFS");
  if (pair.x.largest_moved_point() > 2 * n || pair.y.largest_moved_point() > 2 * n)
    throw DomainError("orbit BFS: pair " + to_string(pair) + " does not live in S_" +
                      std::to_string(2 * n));
  const auto gens = generator_words(n);
  const Word x0 = to_word(pair.x), y0 = to_word(pair.y);
  std::unordered_set<Key, KeyHash> seen{{pack(x0), pack(y0)}};
  std::vector<std::pair<Word, Word>> frontier{{x0, y0}};
  while (!frontier.empty()) {
    std::vector<std::pair<Word, Word>> next;
    for (const auto& [x, y] : frontier) {
      for (const Word& g : gens) {
        std::pair<Word, Word> cands[2];
        if (action == Action::straight) {
          cands[0] = {compose(g, x), compose(g, y)};
          cands[1] = {compose(x, g), compose(y, g)};
        } else {
          cands[0] = {compose(g, x), compose(y, g)};
          cands[1] = {compose(x, g), compose(g, y)};
        }
        for (const auto& c : cands) {
          if (seen.insert({pack(c.first), pack(c.second)}).second) {
            if (seen.size() > budget.elements)
              throw ResourceError("orbit BFS of " + to_string(pair) + " at n = " +
                                      std::to_string(n) + ": " +
                                      std::to_string(seen.size()) +
                                      " members found before stopping",
                                  seen.size(), budget.elements);
            next.push_back(c);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

PermPair unpack_pair(const Key& k, int degree) {
  return {from_word(unpack(k.x), degree), from_word(unpack(k.y), degree)};
}

BigInt order_squared(int n) {
  const BigInt b = hyperoctahedral_order(n);
  return b * b;
}

}  // namespace

Orbit orbit_of(const PermPair& pair, int n, Action action, const Budget& budget) {
  const auto seen = bfs(pair, n, action, budget);
  std::vector<Key> keys(seen.begin(), seen.end());
  std::sort(keys.begin(), keys.end());

  Orbit orbit;
  orbit.members.reserve(keys.size());
  for (const Key& k : keys) orbit.members.push_back(unpack_pair(k, 2 * n));

  OrbitRecord& rec = orbit.record;
  rec.action = action;
  rec.magnitude = magnitude(pair.x, pair.y);
  rec.product_weight = product_weight(pair.x, pair.y);
  rec.min_rank = n;
  for (const auto& m : orbit.members) rec.min_rank = std::min(rec.min_rank, pair_rank(m));
  const int deg = 2 * std::max(rec.min_rank, 1);
  for (const auto& m : orbit.members) {
    if (pair_rank(m) == rec.min_rank) {
      rec.representative = {m.x.resized(deg), m.y.resized(deg)};
      break;
    }
  }
  rec.size_at[n] = BigInt(orbit.members.size());
  return orbit;
}

BigInt orbit_size(const PermPair& pair, int n, Action action, const Budget& budget) {
  return BigInt(bfs(pair, n, action, budget).size());
}

namespace {

int anchor_rank(const OrbitRecord& record, Anchor anchor) {
  return anchor == Anchor::magnitude ? record.magnitude : record.min_rank;
}

}  // namespace

BigInt extract_k(OrbitRecord& record, Anchor anchor, const Budget& budget) {
  const int r = anchor_rank(record, anchor);
  if (r < record.min_rank)
    throw ConsistencyError("orbit anchor below the least rank the orbit reaches");
  BigInt size;
  if (r == 0) {
    size = 1;
  } else if (auto it = record.size_at.find(r); it != record.size_at.end()) {
    size = it->second;
  } else {
    size = orbit_size(record.representative, r, record.action, budget);
    record.size_at[r] = size;
  }
  BigInt k = exact_div(order_squared(r), size, "orbit constant");
  (anchor == Anchor::magnitude ? record.k_constant : record.k_min_rank) = k;
  return k;
}

BigInt predicted_size(const OrbitRecord& record, int n, Anchor anchor) {
  const int r = anchor_rank(record, anchor);
  if (n < r)
    throw UnsupportedRange("orbit size formula anchored at " + std::to_string(r) +
                           " is not used at n = " + std::to_string(n));
  const auto& k = anchor == Anchor::magnitude ? record.k_constant : record.k_min_rank;
  if (!k) throw DomainError("orbit constant has not been extracted");
  return exact_div(order_squared(n), *k * pow2(n - r) * factorial(n - r),
                   "predicted orbit size");
}

namespace {

std::vector<Word> target_words(const Partition& nu, int n, Target target,
                               const Budget& budget) {
  std::vector<Permutation> ts =
      target == Target::full ? enumerate_K(nu, n, KMode::closure, budget)
                             : restricted_K(nu, nu.weight(), n, budget);
  std::vector<Word> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(to_word(t));
  return out;
}

bool word_in_B(const Word& w, int n) {
  for (int i = 0; i < n; ++i)
    if ((w.v[2 * i] >> 1) != (w.v[2 * i + 1] >> 1)) return false;
  return true;
}

bool empty_case(const Partition& mu, const Partition& lambda, const Partition& nu, int n) {
  return mu.weight() > n || lambda.weight() > n || nu.weight() > n;
}

void check_restricted_magnitude(const OrbitSummary& s, const Partition& mu,
                                const Partition& lambda, const Partition& nu) {
  const int m_v = mu.weight() + lambda.weight() + nu.weight();
  if (s.magnitude != m_v)
    throw ConsistencyError("orbit " + to_string(s.representative) + " has magnitude " +
                           std::to_string(s.magnitude) + ", expected " +
                           std::to_string(m_v));
}

}  // namespace

OrbitCount count_orbits(const Partition& mu, const Partition& lambda, const Partition& nu,
                        int n, Target target, const Budget& budget) {
  OrbitCount out;
  if (empty_case(mu, lambda, nu, n)) return out;
  require_packable(n, "count_orbits");

  const Word x0 = to_word(canonical_rep(mu));
  const Word x0_inv = inverse(x0);
  const std::uint64_t lambda_key = coset_key_of(lambda);

  std::vector<Word> fibre;
  for (const Word& z : target_words(nu, n, target, budget)) {
    const Word y = compose(x0_inv, z);
    if (coset_key(y, n) == lambda_key) fibre.push_back(y);
  }
  std::sort(fibre.begin(), fibre.end(),
            [](const Word& a, const Word& b) { return pack(a) < pack(b); });
  if (fibre.empty()) return out;
  std::unordered_map<std::uint64_t, int> index;
  for (int i = 0; i < static_cast<int>(fibre.size()); ++i) index[pack(fibre[i])] = i;

  // Stabilizer of x0: pairs (a, x0^-1 a x0) with both factors in B_n.
  std::vector<Word> stab;
  for_each_B(
      n,
      [&](const Permutation& a) {
        const Word aw = to_word(a);
        if (word_in_B(compose(x0_inv, compose(aw, x0)), n)) stab.push_back(aw);
      },
      budget);

  // A small generating set, grown greedily.
  std::vector<Word> gens;
  std::unordered_set<std::uint64_t> group{pack(identity_word())};
  for (const Word& a : stab) {
    if (group.contains(pack(a))) continue;
    gens.push_back(a);
    std::vector<Word> frontier;
    for (std::uint64_t h : group) frontier.push_back(unpack(h));
    while (!frontier.empty()) {
      std::vector<Word> next;
      for (const Word& h : frontier)
        for (const Word& g : gens) {
          const Word hg = compose(h, g);
          if (group.insert(pack(hg)).second) next.push_back(hg);
        }
      frontier = std::move(next);
    }
  }
  if (group.size() != stab.size())
    throw ConsistencyError("stabilizer generators do not close on the stabilizer");

  DisjointSet ds(static_cast<int>(fibre.size()));
  for (int i = 0; i < static_cast<int>(fibre.size()); ++i) {
    for (const Word& a : gens) {
      const Word b = compose(x0_inv, compose(a, x0));
      const Word moved = compose(b, compose(fibre[i], inverse(a)));
      auto it = index.find(pack(moved));
      if (it == index.end())
        throw ConsistencyError("stabilizer action left the fibre");
      ds.unite(i, it->second);
    }
  }

  const BigInt k_mu = exact_div(order_squared(n), BigInt(stab.size()), "|K_mu(n)|");
  const Permutation x0_perm = from_word(x0, 2 * n);
  std::vector<int> slot(fibre.size(), -1);
  for (int i = 0; i < static_cast<int>(fibre.size()); ++i) {
    const int root = ds.find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.orbits.size());
      OrbitSummary s;
      s.representative = {x0_perm, from_word(fibre[i], 2 * n)};
      s.magnitude = magnitude(s.representative.x, s.representative.y);
      s.product_weight = product_weight(s.representative.x, s.representative.y);
      s.size = k_mu * ds.set_size(root);
      if (target == Target::restricted) check_restricted_magnitude(s, mu, lambda, nu);
      out.total += s.size;
      out.orbits.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<PermPair> enumerate_V(const Partition& mu, const Partition& lambda,
                                  const Partition& nu, int n, Target target,
                                  const Budget& budget) {
  std::vector<PermPair> out;
  if (empty_case(mu, lambda, nu, n)) return out;
  require_packable(n, "enumerate_V");
  const auto targets = target_words(nu, n, target, budget);
  std::vector<Word> xs;
  for_each_K(mu, n, KMode::closure, [&](const Permutation& x) { xs.push_back(to_word(x)); },
             budget);
  budget.require(saturating_mul(targets.size(), xs.size()), "enumerating V(n)");
  const std::uint64_t lambda_key = coset_key_of(lambda);
  std::vector<Key> keys;
  for (const Word& x : xs) {
    const Word x_inv = inverse(x);
    for (const Word& z : targets) {
      const Word y = compose(x_inv, z);
      if (coset_key(y, n) == lambda_key) keys.push_back({pack(x), pack(y)});
    }
  }
  std::sort(keys.begin(), keys.end());
  for (const Key& k : keys) out.push_back(unpack_pair(k, 2 * n));
  return out;
}

OrbitCount count_orbits_by_bfs(const Partition& mu, const Partition& lambda,
                               const Partition& nu, int n, Target target,
                               const Budget& budget) {
  OrbitCount out;
  const auto v = enumerate_V(mu, lambda, nu, n, target, budget);
  if (v.empty()) return out;
  const Permutation x0 = canonical_rep(mu).padded(2 * n);
  std::set<PermPair> visited;
  for (const auto& p : v) {
    if (visited.contains(p)) continue;
    Orbit orbit = orbit_of(p, n, Action::revert, budget);
    OrbitSummary s;
    bool found = false;
    for (const auto& m : orbit.members) {
      visited.insert(m);
      if (m.x == x0 && (!found || m.y < s.representative.y)) {
        s.representative = m;
        found = true;
      }
    }
    if (!found) throw ConsistencyError("orbit misses the slice through canonical_rep");
    s.representative.x = x0;
    s.magnitude = orbit.record.magnitude;
    s.product_weight = orbit.record.product_weight;
    s.size = BigInt(orbit.members.size());
    if (target == Target::restricted) check_restricted_magnitude(s, mu, lambda, nu);
    out.total += s.size;
    out.orbits.push_back(std::move(s));
  }
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const OrbitSummary& a, const OrbitSummary& b) {
              return a.representative < b.representative;
            });
  if (out.total != BigInt(v.size()))
    throw ConsistencyError("orbit sizes do not add up to |V(n)|");
  return out;
}

}  // namespace hecke
