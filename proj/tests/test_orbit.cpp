#include <doctest.h>

#include <set>

#include "gen.hpp"
#include "hecke/coset.hpp"
#include "hecke/errors.hpp"
#include "hecke/hyperoctahedral.hpp"
#include "hecke/orbit.hpp"
#include "hecke/supports.hpp"

using namespace hecke;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

}  // namespace

TEST_SUITE("orbit") {
  TEST_CASE("actions") {
    std::mt19937_64 rng(51);
    const PermPair ee{Permutation{}, Permutation{}};
    for (int k = 0; k < 300; ++k) {
      const int n = gen::between(1, 5, rng);
      const Permutation a = random_B(n, rng), b = random_B(n, rng);
      const Permutation c = random_B(n, rng), d = random_B(n, rng);
      const PermPair p{gen::permutation(2 * n, rng), gen::permutation(2 * n, rng)};
      CHECK(act(ee, a, b, Action::revert, n) == PermPair{a * b.inverse(), b * a.inverse()});
      for (Action action : {Action::straight, Action::revert}) {
        CHECK(act(p, Permutation{}, Permutation{}, action, n) == p);
        CHECK(act(act(p, c, d, action, n), a, b, action, n) == act(p, a * c, b * d, action, n));
      }
      CHECK(phi(act(p, a, b, Action::straight, n)) == act(phi(p), a, b, Action::revert, n));
      const PermPair q = act(p, a, b, Action::revert, n);
      CHECK(magnitude(q.x, q.y) == magnitude(p.x, p.y));
      CHECK(product_weight(q.x, q.y) == product_weight(p.x, p.y));
    }
    CHECK_THROWS_AS(act(ee, P("(1 3)"), Permutation{}, Action::revert, 2), DomainError);
    CHECK(pair_rank(PermPair{P("(1 3)"), P("(2 5)")}) == 3);
    CHECK(pair_rank(ee) == 0);
  }

  TEST_CASE("orbit of the identity pair") {
    for (int n = 2; n <= 3; ++n) {
      const Orbit o = orbit_of(PermPair{Permutation{}, Permutation{}}, n, Action::revert);
      CHECK(BigInt(o.members.size()) == hyperoctahedral_order(n));
      for (const auto& m : o.members) {
        CHECK(is_in_B(m.x, n));
        CHECK(m.y == m.x.inverse());
      }
    }
    OrbitRecord r = orbit_of(PermPair{Permutation{}, Permutation{}}, 2, Action::revert).record;
    CHECK(r.magnitude == 0);
    CHECK(extract_k(r, Anchor::magnitude) == 1);
    CHECK(predicted_size(r, 4, Anchor::magnitude) == hyperoctahedral_order(4));
  }

  TEST_CASE("orbit of ((1 3),(1 3))") {
    const PermPair p{P("(1 3)"), P("(1 3)")};
    const Orbit small = orbit_of(p, 2, Action::revert);
    CHECK(64 % small.members.size() == 0);
    CHECK(std::is_sorted(small.members.begin(), small.members.end()));
    CHECK(std::binary_search(small.members.begin(), small.members.end(), p));

    OrbitRecord r = orbit_of(p, 4, Action::revert).record;
    CHECK(r.magnitude == 4);
    CHECK(r.product_weight == 0);
    CHECK(r.min_rank == 2);
    CHECK(r.representative == PermPair{P("(2 3)"), P("(2 3)")});
    CHECK(r.size_at.at(4) == 4608);
    const BigInt k = extract_k(r, Anchor::magnitude);
    CHECK(k == 32);
    CHECK(predicted_size(r, 4, Anchor::magnitude) == 4608);
    CHECK_THROWS_AS(predicted_size(r, 3, Anchor::magnitude), UnsupportedRange);
    CHECK_THROWS_AS(predicted_size(r, 5, Anchor::min_rank), DomainError);
    CHECK(extract_k(r, Anchor::min_rank) == 4);
    CHECK(predicted_size(r, 4, Anchor::min_rank) == 4608);
    CHECK(predicted_size(r, 5, Anchor::min_rank) == 76800);
    CHECK(orbit_size(p, 5, Action::revert) == 76800);
  }

  TEST_CASE("budget exhaustion reports the partial count") {
    try {
      orbit_of(PermPair{P("(1 3)"), P("(1 3)")}, 4, Action::revert, Budget{100});
      FAIL("expected a ResourceError");
    } catch (const ResourceError& e) {
      CHECK(e.requested() > 100);
    }
  }

  TEST_CASE("phi carries straight orbits onto reverted orbits") {
    std::mt19937_64 rng(52);
    for (int k = 0; k < 20; ++k) {
      const int n = gen::between(1, 3, rng);
      const PermPair p{gen::permutation(2 * n, rng), gen::permutation(2 * n, rng)};
      const Orbit s = orbit_of(p, n, Action::straight);
      const Orbit r = orbit_of(phi(p), n, Action::revert);
      CHECK(s.members.size() == r.members.size());
      std::set<PermPair> mapped;
      for (const auto& m : s.members) mapped.insert(phi(m));
      CHECK(mapped == std::set<PermPair>(r.members.begin(), r.members.end()));
      for (const auto& m : r.members) {
        CHECK(magnitude(m.x, m.y) == r.record.magnitude);
        CHECK(product_weight(m.x, m.y) == r.record.product_weight);
      }
    }
  }

  TEST_CASE("orbit counts") {
    std::vector<std::size_t> full;
    for (int n = 2; n <= 4; ++n) {
      full.push_back(count_orbits(Partition{1}, Partition{1}, Partition{1}, n, Target::full).count());
      const OrbitCount r = count_orbits(Partition{1}, Partition{1}, Partition{}, n, Target::restricted);
      CHECK(r.count() == 1);
      CHECK(r.orbits.front().magnitude == 4);
    }
    CHECK(full == std::vector<std::size_t>{3, 10, 30});
  }

  TEST_CASE("slice counting agrees with BFS partition") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& mu : partitions_with_weight_at_most(2))
        for (const auto& lam : partitions_with_weight_at_most(2))
          for (const auto& nu : partitions_with_weight_at_most(2))
            for (Target target : {Target::full, Target::restricted}) {
              const OrbitCount a = count_orbits(mu, lam, nu, n, target);
              const OrbitCount b = count_orbits_by_bfs(mu, lam, nu, n, target);
              REQUIRE(a.count() == b.count());
              CHECK(a.total == b.total);
              CHECK(BigInt(enumerate_V(mu, lam, nu, n, target).size()) == a.total);
              for (std::size_t i = 0; i < a.count(); ++i) {
                CHECK(a.orbits[i].representative == b.orbits[i].representative);
                CHECK(a.orbits[i].size == b.orbits[i].size);
              }
            }
  }

  TEST_CASE("restricted V compresses below its magnitude") {
    const int m_v = 6;
    for (int n = 2; n <= 3; ++n) {
      const auto v = enumerate_V(Partition{1}, Partition{1}, Partition{1}, n, Target::restricted);
      std::set<PermPair> reps;
      for (const auto& p : v) {
        CHECK(magnitude(p.x, p.y) == m_v);
        const CompressResult c = compress(p.x, p.y);
        CHECK(c.rank <= m_v);
        reps.insert(PermPair{c.pair.x, c.pair.y});
      }
      const auto orbits = count_orbits(Partition{1}, Partition{1}, Partition{1}, n, Target::restricted);
      CHECK(orbits.count() <= reps.size());
    }
  }
}
