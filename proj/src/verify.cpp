#include "hecke/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "hecke/coset.hpp"
#include "hecke/errors.hpp"
#include "hecke/hyperoctahedral.hpp"
#include "hecke/orbit.hpp"
#include "hecke/packed.hpp"
#include "hecke/supports.hpp"

namespace hecke {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"supports", "cosets", "orbits", "hecke", "all"};
  return names;
}

namespace {

constexpr std::size_t kStoredFailures = 100;

class Checker {
 public:
  Checker(std::string module, VerifyReport& report)
      : module_(std::move(module)), report_(report) {}

  void expect(bool ok, const std::string& invariant,
              const std::function<std::string()>& counterexample) {
    ++report_.checks;
    if (ok) return;
    fail(invariant, counterexample());
  }

  // Runs body; any exception from the library counts as a failure.
  void guard(const std::string& invariant, const std::string& context,
             const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++report_.checks;
      fail(invariant, context + ": " + e.what());
    }
  }

 private:
  void fail(const std::string& invariant, std::string counterexample) {
    if (report_.failures.size() < kStoredFailures)
      report_.failures.push_back({module_, invariant, std::move(counterexample)});
    else
      ++report_.dropped;
  }

  std::string module_;
  VerifyReport& report_;
};

Permutation random_permutation(int degree, std::mt19937_64& rng) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

void for_each_S(int degree, const std::function<void(const Permutation&)>& visit) {
  for_each_permutation(degree, Budget{}, [&](const Word& w) { visit(from_word(w, degree)); });
}

bool disjoint(const PointSet& a, const PointSet& b) {
  for (int k : a)
    if (b.contains(k)) return false;
  return true;
}

bool subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string show(const Permutation& x) { return x.to_string(); }

std::string show(const Permutation& x, const Permutation& y) {
  return "(" + x.to_string() + ", " + y.to_string() + ")";
}

int exhaustive_n(const VerifyOptions& o) { return std::min(o.n_max, 3); }

// ---------------------------------------------------------------- supports

void check_single(Checker& c, const Permutation& x, int n, const Permutation& a,
                  const Permutation& b) {
  const PointSet d = couple_support(x);
  const PointSet ds = unpaired_support(x);
  c.expect(2 * d.size() == ds.size(), "2|D(x)| = |DS(x)|", [&] { return show(x); });
  c.expect(unpaired_support(a * x * b).size() == ds.size(), "|DS(axb)| = |DS(x)|",
           [&] { return show(x) + " with a = " + show(a) + ", b = " + show(b); });
  c.guard("straighten postconditions", show(x), [&] {
    const auto s = straighten(x, n);
    const SupportProfile p = profile(s.result);
    c.expect(s.result == s.left * x * s.right && is_in_B(s.left, n) && is_in_B(s.right, n) &&
                 p.couples == d && p.support == p.unpaired,
             "straighten postconditions", [&] { return show(x) + " -> " + show(s.result); });
  });
}

void check_pair(Checker& c, const Permutation& x, const Permutation& y, int n) {
  const PointSet cs = completed_support(x, y);
  c.expect(partners_of(cs) == cs, "t(CS) = CS", [&] { return show(x, y); });
  for (int i = 1; i <= 2 * n; ++i) {
    if (cs.contains(i)) continue;
    const int j = y(i);
    c.expect(x(j) == i, "CS item 1: y(i) = j iff x(j) = i",
             [&] { return show(x, y) + " at i = " + std::to_string(i); });
    c.expect((x(i) != i) == (y(i) != i), "CS item 2: i in S(x) iff i in S(y)",
             [&] { return show(x, y) + " at i = " + std::to_string(i); });
    c.expect(y(partner(i)) == partner(j) && x(partner(j)) == partner(x(j)),
             "CS item 3: y(t(i)) = t(j), x(t(j)) = t(x(j))",
             [&] { return show(x, y) + " at i = " + std::to_string(i); });
  }
  c.guard("shrink postconditions", show(x, y), [&] {
    const PairWitness w = shrink(x, y, n);
    const PermPair back = act({x, y}, w.a, w.b, Action::revert, n);
    PointSet moved = support(w.x);
    moved.merge(support(w.y));
    c.expect(back == PermPair{w.x, w.y} && w.x * w.y == x * y &&
                 completed_support(w.x, w.y) == cs && subset(moved, cs),
             "shrink postconditions", [&] { return show(x, y) + " -> " + show(w.x, w.y); });
  });
  c.guard("compress postconditions", show(x, y), [&] {
    const CompressResult r = compress(x, y);
    const int m = magnitude(x, y);
    const int deg = std::max(n, r.rank);
    const PermPair back = act({x, y}, r.pair.a.padded(2 * deg), r.pair.b.padded(2 * deg),
                              Action::revert, deg);
    c.expect(r.rank <= m && r.pair.x.largest_moved_point() <= 2 * r.rank &&
                 r.pair.y.largest_moved_point() <= 2 * r.rank &&
                 back == PermPair{r.pair.x, r.pair.y},
             "compress postconditions",
             [&] { return show(x, y) + " -> " + show(r.pair.x, r.pair.y); });
  });
}

void suite_supports(const VerifyOptions& o, VerifyReport& report) {
  Checker c("supports", report);
  const auto gens_of = [](int n) { return generators_B(n); };
  for (int n = 1; n <= exhaustive_n(o); ++n) {
    const auto gens = gens_of(n);
    for_each_S(2 * n, [&](const Permutation& x) {
      for (const auto& a : gens) check_single(c, x, n, a, gens.back());
    });
  }
  const int pair_n = std::min(o.n_max, 2);
  for (int n = 1; n <= pair_n; ++n)
    for_each_S(2 * n, [&](const Permutation& x) {
      for_each_S(2 * n, [&](const Permutation& y) { check_pair(c, x, y, n); });
    });

  std::mt19937_64 rng(o.seed);
  for (int k = 0; k < o.random_cases; ++k) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(o.n_max));
    const Permutation x = random_permutation(2 * n, rng);
    const Permutation y = random_permutation(2 * n, rng);
    check_single(c, x, n, random_B(n, rng), random_B(n, rng));
    check_pair(c, x, y, n);
    const Permutation a = random_B(n, rng), b = random_B(n, rng);
    const PermPair moved = act({x, y}, a, b, Action::revert, n);
    c.expect(magnitude(moved.x, moved.y) == magnitude(x, y) &&
                 product_weight(moved.x, moved.y) == product_weight(x, y),
             "magnitude and product weight constant on reverted orbits",
             [&] { return show(x, y) + " moved by " + show(a, b); });
    const PermPair fx = phi({x, y});
    const PermPair fmoved = phi(act({x, y}, a, b, Action::straight, n));
    c.expect(magnitude(fmoved.x, fmoved.y) == magnitude(fx.x, fx.y),
             "magnitude of phi(pair) constant on straightforward orbits",
             [&] { return show(x, y) + " moved by " + show(a, b); });
  }
}

// ---------------------------------------------------------------- cosets

void check_coset_element(Checker& c, const Permutation& x, int n) {
  const CosetGraph g(x, n);
  std::vector<int> straight(2 * n + 1, 0), curved(2 * n + 1, 0);
  for (auto [u, v] : g.straight_edges()) ++straight[u], ++straight[v];
  for (auto [u, v] : g.curved_edges()) ++curved[u], ++curved[v];
  bool one_each = true;
  for (int v = 1; v <= 2 * n; ++v) one_each = one_each && straight[v] == 1 && curved[v] == 1;
  c.expect(one_each, "each vertex on one straight and one curved edge",
           [&] { return show(x); });
  bool even = true;
  for (const auto& comp : g.components()) even = even && comp.size() % 2 == 0;
  c.expect(even, "components have even size", [&] { return show(x); });
  const Partition type = coset_type(x, n);
  c.expect(g.coset_type() == type, "graph route and couple route agree",
           [&] { return show(x); });
  c.expect(coset_type(x.inverse(), n) == type, "coset type of x and x^-1 agree",
           [&] { return show(x); });
  const Partition mu = type.stabilized();
  c.expect(static_cast<int>(couple_support(x).size()) == mu.weight() &&
               static_cast<int>(unpaired_support(x).size()) == 2 * mu.weight(),
           "|DS(x)| = 2|D(x)| = 2w(mu)", [&] { return show(x); });
  const int s = x.support_size();
  c.expect(s >= mu.weight(), "|S(x)| >= w(mu)", [&] { return show(x); });
  if (s == mu.weight()) {
    const PointSet sx = support(x);
    c.expect(stable_cycle_type(x) == mu && disjoint(sx, partners_of(sx)),
             "|S(x)| = w(mu) gives lambda_x = mu_x and S(x), tS(x) disjoint",
             [&] { return show(x); });
  }
  if (is_in_B(x, n))
    c.expect(type == Partition(std::vector<int>(n, 1)), "B_n has coset type (1^n)",
             [&] { return show(x); });
}

void check_component_lemma(Checker& c, const Partition& mu, int k, std::mt19937_64& rng) {
  const int w = mu.weight();
  const int n = k + w;
  // c0 on the couples k+1..k+w, x1 on the first k couples.
  std::vector<int> shift(n);
  std::iota(shift.begin(), shift.end(), 1);
  std::rotate(shift.begin(), shift.begin() + k, shift.end());
  const Permutation u = wreath_element(shift, std::vector<bool>(n, false));
  std::vector<int> bperm(n);
  std::iota(bperm.begin(), bperm.end(), 1);
  std::shuffle(bperm.begin() + k, bperm.end(), rng);
  std::vector<bool> flips(n, false);
  for (int i = k; i < n; ++i) flips[i] = rng() & 1u;
  const Permutation b = wreath_element(bperm, flips);
  const Permutation c0 = b * (u * canonical_rep(mu).padded(2 * n) * u.inverse()) * b.inverse();
  const Permutation x1 = k > 0 ? random_permutation(2 * k, rng).padded(2 * n)
                               : Permutation::identity(2 * n);
  const Permutation x = c0 * x1;
  const PointSet dsc = unpaired_support(c0);
  bool found = false;
  for (const auto& comp : CosetGraph(x, n).components())
    found = found || PointSet(comp.begin(), comp.end()) == dsc;
  c.expect(found, "DS(c) is one component of the graph of c x1",
           [&] { return show(c0) + " * " + show(x1); });
}

void suite_cosets(const VerifyOptions& o, VerifyReport& report) {
  Checker c("cosets", report);
  for (int n = 1; n <= exhaustive_n(o); ++n)
    for_each_S(2 * n, [&](const Permutation& x) { check_coset_element(c, x, n); });

  // Constant on double cosets: exhaustive at n = 2.
  if (o.n_max >= 2) {
    const auto b2 = enumerate_B(2);
    for_each_S(4, [&](const Permutation& x) {
      const Partition t = coset_type(x, 2);
      for (const auto& a : b2)
        for (const auto& b : b2)
          c.expect(coset_type(a * x * b, 2) == t, "coset type constant on B_n x B_n",
                   [&] { return show(x) + " by " + show(a, b); });
    });
  }

  std::mt19937_64 rng(o.seed ^ 0xC05E7ull);
  for (int k = 0; k < o.random_cases; ++k) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(o.n_max));
    const Permutation x = random_permutation(2 * n, rng);
    const Permutation a = random_B(n, rng), b = random_B(n, rng);
    c.expect(coset_type(a * x * b, n) == coset_type(x, n), "coset type constant on B_n x B_n",
             [&] { return show(x) + " by " + show(a, b); });
    check_coset_element(c, x, n);
  }

  for (int n = 1; n <= exhaustive_n(o); ++n)
    for (const auto& full : partitions_of(n)) {
      const Partition mu = full.stabilized();
      c.guard("closure and filter enumerations agree", mu.to_string(), [&] {
        const auto f = enumerate_K(mu, n, KMode::filter);
        const auto cl = enumerate_K(mu, n, KMode::closure);
        c.expect(f == cl && BigInt(f.size()) == double_coset_size(mu, n),
                 "closure and filter enumerations agree",
                 [&] { return mu.to_string() + " at n = " + std::to_string(n); });
      });
    }

  for (const auto& mu : partitions_with_weight_at_most(4)) {
    const int w = mu.weight();
    for (int n = std::max(w, 1); n <= std::min(w + 2, std::max(o.n_max, 1)); ++n) {
      c.guard("K^w_mu(n) is one B_n-conjugacy class", mu.to_string(), [&] {
        const auto restricted = restricted_K(mu, w, n);
        const auto cls = conjugacy_class_in_B(canonical_rep(mu), n);
        c.expect(restricted == cls, "K^w_mu(n) is one B_n-conjugacy class",
                 [&] { return mu.to_string() + " at n = " + std::to_string(n); });
        c.expect(BigInt(restricted.size()) == restricted_class_size(mu, n),
                 "restricted class size formula",
                 [&] { return mu.to_string() + " at n = " + std::to_string(n); });
      });
    }
  }

  // Single cycles c only.
  for (const auto& mu : partitions_with_weight_at_most(std::min(5, o.n_max + 2)))
    for (int k = 0; k <= 2; ++k)
      if (mu.length() == 1 && mu.weight() + k <= 8)
        for (int rep = 0; rep < 5; ++rep) check_component_lemma(c, mu, k, rng);
}

// ---------------------------------------------------------------- orbits

void suite_orbits(const VerifyOptions& o, VerifyReport& report) {
  Checker c("orbits", report);
  std::mt19937_64 rng(o.seed ^ 0x0EB17ull);
  const int cases = std::max(o.random_cases / 10, 1);
  for (int k = 0; k < cases; ++k) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(o.n_max));
    const PermPair p{random_permutation(2 * n, rng), random_permutation(2 * n, rng)};
    const Permutation a1 = random_B(n, rng), b1 = random_B(n, rng);
    const Permutation a2 = random_B(n, rng), b2 = random_B(n, rng);
    const Permutation e = Permutation::identity(2 * n);
    for (Action act_kind : {Action::straight, Action::revert}) {
      c.expect(act(p, e, e, act_kind, n) == p, "identity acts trivially",
               [&] { return to_string(p); });
      c.expect(act(act(p, a2, b2, act_kind, n), a1, b1, act_kind, n) ==
                   act(p, a1 * a2, b1 * b2, act_kind, n),
               "action compatibility", [&] { return to_string(p); });
    }
    c.expect(phi(act(p, a1, b1, Action::straight, n)) ==
                 act(phi(p), a1, b1, Action::revert, n),
             "phi intertwines the actions", [&] { return to_string(p); });
  }

  for (int n = 1; n <= std::min(o.n_max, 3); ++n) {
    const Permutation e = Permutation::identity(2 * n);
    c.expect(orbit_size({e, e}, n, Action::revert) == hyperoctahedral_order(n),
             "orbit of (e, e) has 2^n n! members", [&] { return std::to_string(n); });
  }

  const int orbit_n = std::min(o.n_max, 4);
  for (int seed = 0; seed < 20 && orbit_n >= 2; ++seed) {
    std::mt19937_64 r(o.seed + static_cast<std::uint64_t>(seed));
    const int n = 2 + seed % (orbit_n - 1);
    const PermPair p{random_permutation(2 * n, r), random_permutation(2 * n, r)};
    c.guard("phi maps straightforward orbits onto reverted orbits", to_string(p), [&] {
      const Orbit s = orbit_of(p, n, Action::straight);
      const Orbit rv = orbit_of(phi(p), n, Action::revert);
      std::vector<PermPair> image;
      for (const auto& m : s.members) image.push_back(phi(m));
      std::sort(image.begin(), image.end());
      c.expect(image == rv.members, "phi maps straightforward orbits onto reverted orbits",
               [&] { return to_string(p) + " at n = " + std::to_string(n); });
      bool constant = true;
      for (std::size_t i = 0; i < rv.members.size(); i += 1 + rv.members.size() / 50) {
        const auto& m = rv.members[i];
        constant = constant && magnitude(m.x, m.y) == rv.record.magnitude &&
                   product_weight(m.x, m.y) == rv.record.product_weight;
      }
      c.expect(constant, "record magnitude and product weight match members",
               [&] { return to_string(phi(p)); });
    });
  }

  const auto small = partitions_with_weight_at_most(2);
  for (int n = 1; n <= std::min(o.n_max, 3); ++n)
    for (const auto& mu : small)
      for (const auto& lambda : small)
        for (const auto& nu : small)
          for (Target t : {Target::full, Target::restricted}) {
            const std::string ctx = mu.to_string() + " " + lambda.to_string() + " " +
                                    nu.to_string() + " at n = " + std::to_string(n);
            c.guard("slice count equals BFS partition", ctx, [&] {
              const OrbitCount a = count_orbits(mu, lambda, nu, n, t);
              const OrbitCount b = count_orbits_by_bfs(mu, lambda, nu, n, t);
              bool same = a.total == b.total && a.count() == b.count();
              for (std::size_t i = 0; same && i < a.count(); ++i)
                same = a.orbits[i].representative == b.orbits[i].representative &&
                       a.orbits[i].size == b.orbits[i].size;
              c.expect(same, "slice count equals BFS partition", [&] { return ctx; });
              if (t != Target::restricted) return;
              const int m_v = mu.weight() + lambda.weight() + nu.weight();
              bool fits = true;
              for (const auto& p : enumerate_V(mu, lambda, nu, n, t)) {
                const CompressResult r = compress(p.x, p.y);
                fits = fits && r.rank <= m_v;
              }
              c.expect(fits, "compress maps V into S_2m x S_2m", [&] { return ctx; });
            });
          }
}

// ---------------------------------------------------------------- hecke

void suite_hecke(const VerifyOptions& o, VerifyReport& report) {
  Checker c("hecke", report);
  std::mt19937_64 rng(o.seed ^ 0x4EC6Eull);
  for (int n = 1; n <= std::min(o.n_max, 4); ++n) {
    const std::string at = " at n = " + std::to_string(n);
    c.guard("method agreement", at, [&] {
      const TripleTable conv = conv_table(n, o.count);
      const TripleTable factor = factor_table(n, o.count);
      const TripleTable numer = mainlemma_numerator_table(n, o.count);
      for (const auto& [key, b] : factor) {
        const Partition& mu = std::get<0>(key);
        const Partition& lambda = std::get<1>(key);
        const Partition& nu = std::get<2>(key);
        const std::string ctx =
            mu.to_string() + " " + lambda.to_string() + " " + nu.to_string() + at;
        c.expect(conv.at(key) == b, "conv = factor",
                 [&] { return ctx + ": " + to_decimal(conv.at(key)) + " vs " + to_decimal(b); });
        c.expect(numer.at(key) == b * restricted_class_size(nu, n),
                 "b |K^w_nu(n)| = |V(K_mu x K_lambda; K^w_nu)|", [&] { return ctx; });
        if (nu.size() > mu.size() + lambda.size())
          c.expect(b == 0, "b = 0 when |nu| > |mu| + |lambda|", [&] { return ctx; });
        if (n <= 3) {
          for (int r = 0; r < 3; ++r) {
            const Permutation z = random_B(n, rng) * canonical_rep(nu).padded(2 * n) *
                                  random_B(n, rng);
            c.expect(b_factor_at(mu, lambda, z, n, o.count) == b,
                     "b independent of the target in K_nu(n)",
                     [&] { return ctx + " with z = " + show(z); });
          }
        }
      }
    });
  }

  struct Case {
    Partition mu, lambda, nu;
  };
  for (const Case& k : {Case{{1}, {1}, {}}, Case{{}, {1}, {1}}}) {
    const int m_v = k.mu.weight() + k.lambda.weight() + k.nu.weight();
    for (int n = m_v; n <= std::min(o.n_max, 5); ++n) {
      const std::string ctx = k.mu.to_string() + " " + k.lambda.to_string() + " " +
                              k.nu.to_string() + " at n = " + std::to_string(n);
      c.guard("orbit method = factor method", ctx, [&] {
        c.expect(b_orbit(k.mu, k.lambda, k.nu, n, o.count) ==
                     b_factor(k.mu, k.lambda, k.nu, n, o.count),
                 "orbit method = factor method", [&] { return ctx; });
      });
    }
  }

  if (o.n_max >= 5) {
    std::vector<FitPoint> pts;
    for (int n = 2; n <= std::min(o.n_max, 5); ++n)
      pts.push_back({n, b_factor({1}, {1}, {}, n, o.count)});
    const FitResult fit = fit_stability(pts, 0, 4);
    c.expect(fit.stable && fit.remark_holds && fit.within_bound,
             "normalized constants fit one polynomial; remark identity",
             [&] { return "(1) (1) - : " + fit.f.to_string(); });
  }
}

}  // namespace

VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw ParseError("unknown suite '" + suite + "'");
  if (opts.n_max < 1) throw DomainError("verify: n-max must be at least 1");
  if (opts.n_max > 8) throw DomainError("verify: n-max above 8 is not supported");
  VerifyReport report;
  const bool all = suite == "all";
  if (all || suite == "supports") suite_supports(opts, report);
  if (all || suite == "cosets") suite_cosets(opts, report);
  if (all || suite == "orbits") suite_orbits(opts, report);
  if (all || suite == "hecke") suite_hecke(opts, report);
  return report;
}

}  // namespace hecke
