#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "gen.hpp"
#include "hecke/bigint.hpp"
#include "hecke/errors.hpp"
#include "hecke/hyperoctahedral.hpp"
#include "hecke/packed.hpp"
#include "hecke/partition.hpp"
#include "hecke/permutation.hpp"

using namespace hecke;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

// n! / prod i^{m_i} m_i! for the partition lambda(n).
BigInt class_size_oracle(const Partition& full, int n) {
  BigInt z = 1;
  for (int part = 1; part <= n; ++part) {
    const int m = full.multiplicity(part);
    for (int k = 0; k < m; ++k) z *= part;
    z *= factorial(m);
  }
  return factorial(n) / z;
}

}  // namespace

TEST_SUITE("permutation") {
  TEST_CASE("composition applies the right factor first") {
    CHECK((P("(1 2)") * P("(1 2)")).is_identity());
    CHECK(P("(1 3 2)") * P("(3 4)") == P("(1 3 4 2)"));
    const Permutation x = P("(1 5 2)(3 4)");
    CHECK(x * Permutation::identity() == x);
    CHECK(compose(P("(1 2 3)"), P("(1 2)"))(1) == 3);
  }

  TEST_CASE("cycle decomposition") {
    CHECK(cycle_decomposition(P("(1 2)(3 4)")) == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    CHECK(cycle_decomposition(Permutation::identity(5)).empty());
    CHECK(cycle_decomposition(P("(3 2 4 5 1)")) == std::vector<std::vector<int>>{{1, 3, 2, 4, 5}});
  }

  TEST_CASE("stable cycle type") {
    CHECK(stable_cycle_type(P("(1 2 3 4)")) == Partition{3});
    CHECK(stable_cycle_type(Permutation::identity(4)).empty());
    CHECK(stable_cycle_type(P("(1 3 5 7)(9 11 13)(15 17)")) == Partition{3, 2, 1});
  }

  TEST_CASE("conjugacy class membership") {
    CHECK(in_conjugacy_class(P("(1 2)"), Partition{1}, 3));
    CHECK_FALSE(in_conjugacy_class(P("(1 2)(3 4)"), Partition{1}, 4));
    CHECK_THROWS_AS(in_conjugacy_class(P("(1 5)"), Partition{1}, 4), DomainError);
    int count = 0;
    for_each_permutation(4, Budget{}, [&](const Word& w) {
      count += in_conjugacy_class(from_word(w, 4), Partition{1}, 4);
    });
    CHECK(count == 6);
  }

  TEST_CASE("class sizes match the centralizer formula for w <= n <= 6") {
    for (int n = 1; n <= 6; ++n) {
      std::map<Partition, BigInt> counted;
      for_each_permutation(n, Budget{}, [&](const Word& w) {
        ++counted[stable_cycle_type(from_word(w, n))];
      });
      for (const auto& lam : partitions_with_weight_at_most(n)) {
        const int unmoved = n - lam.weight();
        std::vector<int> full;
        for (int p : lam.parts()) full.push_back(p + 1);
        full.insert(full.end(), unmoved, 1);
        CHECK_MESSAGE(counted[lam] == class_size_oracle(Partition::from_unsorted(full), n),
                      lam.to_string() << " at n = " << n);
      }
    }
  }

  TEST_CASE("parsing") {
    CHECK(P("()").is_identity());
    CHECK(P("e").is_identity());
    CHECK(P("3 2 1") == P("(1 3)"));
    CHECK(P("(1 3 5)(2 4)").to_string() == "(1 3 5)(2 4)");
    CHECK(Permutation::identity(3).to_string() == "()");
    CHECK_THROWS_AS(P("(1 2)(2 3)"), ParseError);
    CHECK_THROWS_AS(P("(1 x)"), ParseError);
    CHECK_THROWS_AS(P("1 1 2"), ParseError);
    CHECK_THROWS_AS(Permutation(std::vector<int>{1, 3}), DomainError);
  }

  TEST_CASE("padding does not change equality, cycles or type") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
      const Permutation x = gen::permutation(gen::between(1, 9, rng), rng);
      const Permutation y = x.padded(x.degree() + gen::between(1, 5, rng));
      CHECK(x == y);
      CHECK(x.cycles() == y.cycles());
      CHECK(stable_cycle_type(x) == stable_cycle_type(y));
      CHECK(PermutationHash{}(x) == PermutationHash{}(y));
    }
  }

  TEST_CASE("group laws on random triples") {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 300; ++k) {
      const int n = gen::between(1, 10, rng);
      const Permutation a = gen::permutation(n, rng), b = gen::permutation(n, rng),
                        c = gen::permutation(n, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a.inverse() * a).is_identity());
      CHECK(stable_cycle_type(b * a * b.inverse()) == stable_cycle_type(a));
    }
  }

  TEST_CASE("resizing only drops fixed points") {
    CHECK(P("(1 2)").padded(6).resized(2) == P("(1 2)"));
    CHECK_THROWS_AS(P("(1 4)").resized(2), DomainError);
  }
}

TEST_SUITE("partition") {
  TEST_CASE("weights, unions and completions") {
    CHECK(Partition{3, 1}.union_with(Partition{2, 1}) == Partition{3, 2, 1, 1});
    CHECK(Partition{2}.completion(5) == Partition{2, 1, 1, 1});
    CHECK(Partition{2}.completion(5).length() == 4);
    CHECK(Partition{3, 2, 1}.weight() == 9);
    CHECK(Partition{}.weight() == 0);
    CHECK(Partition{2, 1}.sum_with(Partition{1, 1, 1}) == Partition{3, 2, 1});
    CHECK(Partition{3, 2, 1}.difference(Partition{2}) == Partition{3, 1});
    CHECK(Partition{2, 1, 1}.stabilized() == Partition{1});
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(Partition{3}.difference(Partition{2}), DomainError);
    CHECK_THROWS_AS(Partition{3}.completion(2), DomainError);
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), DomainError);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, 0}), DomainError);
    CHECK_THROWS_AS(Partition::parse("3,,1"), ParseError);
    CHECK_THROWS_AS(Partition::parse("1,3"), ParseError);
  }

  TEST_CASE("text forms") {
    CHECK(Partition::parse("3,2,1") == Partition{3, 2, 1});
    CHECK(Partition::parse("-").empty());
    CHECK(Partition{3, 2, 1}.to_string() == "(3,2,1)");
    CHECK(Partition{}.to_string() == "-");
    CHECK(Partition{3, 2, 1}.to_compact() == "3,2,1");
  }

  TEST_CASE("enumerations") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(4).front() == Partition{4});
    CHECK(partitions_of(6).size() == 11);
    for (const auto& p : partitions_with_weight_at_most(5)) CHECK(p.weight() <= 5);
    CHECK(partitions_with_weight_at_most(4).size() == 5);
  }
}

TEST_SUITE("hyperoctahedral") {
  TEST_CASE("partner") {
    CHECK(partner(5) == 6);
    CHECK(partner(6) == 5);
    for (int k = 1; k <= 100; ++k) CHECK(partner(partner(k)) == k);
  }

  TEST_CASE("membership") {
    CHECK(is_in_B(P("(1 2)"), 2));
    CHECK(is_in_B(P("(1 3)(2 4)"), 2));
    CHECK_FALSE(is_in_B(P("(1 3)"), 2));
    CHECK_THROWS_AS(is_in_B(P("(1 5)"), 2), DomainError);
  }

  TEST_CASE("enumeration") {
    CHECK(enumerate_B(1) == std::vector<Permutation>{Permutation::identity(2), P("(1 2)")});
    const auto b2 = enumerate_B(2);
    CHECK(b2.size() == 8);
    const std::set<Permutation> listed{Permutation::identity(4), P("(1 2)"), P("(3 4)"),
                                       P("(1 2)(3 4)"), P("(1 3)(2 4)"), P("(1 4)(2 3)"),
                                       P("(1 3 2 4)"), P("(1 4 2 3)")};
    CHECK(std::set<Permutation>(b2.begin(), b2.end()) == listed);
    CHECK(enumerate_B(5).size() == 3840);
    CHECK_THROWS_AS(enumerate_B(9), ResourceError);
  }

  TEST_CASE("generators") {
    CHECK(generators_B(1) == std::vector<Permutation>{P("(1 2)")});
    CHECK(generators_B(2) == std::vector<Permutation>{P("(1 2)"), P("(3 4)"), P("(1 3)(2 4)")});
    std::set<Permutation> seen{Permutation::identity(6)};
    std::vector<Permutation> frontier{Permutation::identity(6)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier)
        for (const auto& g : generators_B(3))
          if (seen.insert(g * x).second) next.push_back(g * x);
      frontier = next;
    }
    CHECK(seen.size() == 48);
  }

  TEST_CASE("random elements") {
    CHECK(random_B(3, 42) == random_B(3, 42));
    for (std::uint64_t s = 0; s < 10000; ++s) CHECK(is_in_B(random_B(6, s), 6));
    int hits = 0;
    const int draws = 100000;
    for (std::uint64_t s = 0; s < draws; ++s) hits += random_B(2, s).is_identity();
    const double p = 1.0 / 8, mean = draws * p, sigma = std::sqrt(draws * p * (1 - p));
    CHECK(std::abs(hits - mean) <= 3 * sigma);
  }

  TEST_CASE("centralizer characterization, closure and action on couples") {
    for (int n = 1; n <= 3; ++n) {
      const Permutation t = partner_involution(n);
      std::set<Permutation> group;
      for_each_permutation(2 * n, Budget{}, [&](const Word& w) {
        const Permutation x = from_word(w, 2 * n);
        const bool in = is_in_B(x, n);
        CHECK(in == (x * t * x.inverse() == t));
        if (in) group.insert(x);
      });
      for (const auto& a : group) {
        CHECK(group.contains(a.inverse()));
        for (int i = 1; i <= n; ++i) {
          const int u = a(2 * i - 1), v = a(2 * i);
          CHECK(partner(u) == v);
        }
      }
      for (const auto& a : group)
        for (const auto& b : group) CHECK(group.contains(a * b));
    }
    std::mt19937_64 rng(5);
    for (int k = 0; k < 500; ++k) {
      const int n = gen::between(1, 6, rng);
      const Permutation x = gen::permutation(2 * n, rng);
      const Permutation t = partner_involution(n);
      CHECK(is_in_B(x, n) == (x * t * x.inverse() == t));
    }
  }
}
