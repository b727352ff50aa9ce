#include <doctest.h>

#include "gen.hpp"
#include "hecke/hyperoctahedral.hpp"
#include "hecke/packed.hpp"
#include "hecke/supports.hpp"

using namespace hecke;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

void check_straighten(const Permutation& x, int n) {
  const StraightenResult r = straighten(x, n);
  CHECK(is_in_B(r.left, n));
  CHECK(is_in_B(r.right, n));
  CHECK(r.left * x * r.right == r.result);
  CHECK(couple_support(r.result) == couple_support(x));
  CHECK(support(r.result) == unpaired_support(r.result));
}

void check_shrink(const Permutation& x, const Permutation& y, int n) {
  const PairWitness w = shrink(x, y, n);
  CHECK(is_in_B(w.a, n));
  CHECK(is_in_B(w.b, n));
  CHECK(w.a * x * w.b.inverse() == w.x);
  CHECK(w.b * y * w.a.inverse() == w.y);
  CHECK(w.x * w.y == x * y);
  const PointSet cs = completed_support(w.x, w.y);
  CHECK(cs == completed_support(x, y));
  for (int i : support(w.x)) CHECK(cs.contains(i));
  for (int i : support(w.y)) CHECK(cs.contains(i));
}

}  // namespace

TEST_SUITE("supports") {
  TEST_CASE("profiles") {
    CHECK(support(P("(1 2)")) == PointSet{1, 2});
    CHECK(unpaired_support(P("(1 2)")).empty());
    CHECK(support(P("(1 3 2)")) == PointSet{1, 2, 3});
    CHECK(unpaired_support(P("(1 3 2)")) == PointSet{1, 2, 3, 4});
    CHECK(support(P("(1 3 2 4 5)")) == PointSet{1, 2, 3, 4, 5});
    CHECK(unpaired_support(P("(1 3 2 4 5)")) == PointSet{3, 4, 5, 6});
    CHECK(couple_support(P("(1 3 2 4 5)")) == PointSet{2, 3});
    const SupportProfile p = profile(P("(1 3)"));
    CHECK(p.couples == PointSet{1, 2});
    CHECK(p.unpaired == PointSet{1, 2, 3, 4});
  }

  TEST_CASE("completed support and magnitude") {
    const Permutation e;
    CHECK(completed_support(e, e).empty());
    CHECK(completed_support(P("(1 3)"), P("(1 3)")) == PointSet{1, 2, 3, 4});
    CHECK(completed_support(P("(1 2)"), P("(3 4)")) == PointSet{1, 2, 3, 4});
    CHECK(magnitude(e, e) == 0);
    CHECK(magnitude(P("(1 3)"), P("(1 3)")) == 4);
    CHECK(magnitude(P("(1 2)"), P("(3 4)")) == 4);
    CHECK(product_weight(P("(1 2)"), P("(3 4)")) == 4);
  }

  TEST_CASE("straighten examples") {
    CHECK(straighten(P("(1 2)"), 1).result.is_identity());
    CHECK(straighten(P("(1 3 2)"), 2).result == P("(1 3 4 2)"));
    const Permutation packed = P("(1 3 4 2)(5 7 8 6)");
    CHECK(support(packed) == unpaired_support(packed));
    CHECK(straighten(packed, 4).result == packed);
  }

  TEST_CASE("shrink and compress examples") {
    const PairWitness w = shrink(P("(1 2)"), P("(1 2)"), 1);
    CHECK(w.x.is_identity());
    CHECK(w.y.is_identity());
    const PairWitness u = shrink(P("(1 3)"), P("(1 3)"), 2);
    CHECK(u.x == P("(1 3)"));
    CHECK(u.y == P("(1 3)"));
    const CompressResult c = compress(P("(5 7)"), P("(5 7)"));
    CHECK(c.rank == 2);
    CHECK(c.pair.x == P("(1 3)"));
    CHECK(c.pair.y == P("(1 3)"));
    CHECK(compress(Permutation{}, Permutation{}).rank == 0);
    const CompressResult same = compress(P("(1 3)"), P("(1 3)"));
    CHECK(same.relabel.is_identity());
  }

  TEST_CASE("couple counts exhaustively over S_6 and randomly over S_12") {
    for_each_permutation(6, Budget{}, [&](const Word& w) {
      const Permutation x = from_word(w, 6);
      CHECK(unpaired_support(x).size() == 2 * couple_support(x).size());
    });
    std::mt19937_64 rng(21);
    for (int k = 0; k < 2000; ++k) {
      const Permutation x = gen::permutation(12, rng);
      const SupportProfile p = profile(x);
      CHECK(p.unpaired.size() == 2 * p.couples.size());
      const PointSet near = partners_of(p.support);
      for (int i : p.couples) {
        const bool meets = p.support.contains(2 * i - 1) || near.contains(2 * i - 1) ||
                           p.support.contains(2 * i) || near.contains(2 * i);
        CHECK(meets);
      }
    }
  }

  TEST_CASE("DS size is constant on double cosets") {
    std::mt19937_64 rng(22);
    for (int k = 0; k < 2000; ++k) {
      const int n = gen::between(1, 6, rng);
      const Permutation x = gen::permutation(2 * n, rng);
      const Permutation a = random_B(n, rng), b = random_B(n, rng);
      CHECK(unpaired_support(a * x * b).size() == unpaired_support(x).size());
    }
  }

  TEST_CASE("straighten postconditions") {
    for (int n = 1; n <= 3; ++n)
      for_each_permutation(2 * n, Budget{}, [&](const Word& w) { check_straighten(from_word(w, 2 * n), n); });
    std::mt19937_64 rng(23);
    for (int k = 0; k < 500; ++k) {
      const int n = gen::between(1, 6, rng);
      check_straighten(gen::permutation(2 * n, rng), n);
    }
  }

  TEST_CASE("properties of CS over S_4 x S_4") {
    for_each_permutation(4, Budget{}, [&](const Word& wx) {
      const Permutation x = from_word(wx, 4);
      for_each_permutation(4, Budget{}, [&](const Word& wy) {
        const Permutation y = from_word(wy, 4);
        const PointSet cs = completed_support(x, y);
        CHECK(partners_of(cs) == cs);
        CHECK(2 * magnitude(x, y) >= static_cast<int>(cs.size()));
        for (int i = 1; i <= 8; ++i) {
          if (cs.contains(i)) continue;
          const int j = y(i);
          CHECK(x(j) == i);
          CHECK((x(i) != i) == (y(i) != i));
          CHECK(y(partner(i)) == partner(y(i)));
          CHECK(x(partner(j)) == partner(x(j)));
        }
        check_shrink(x, y, 2);
      });
    });
  }

  TEST_CASE("shrink and compress on random pairs") {
    std::mt19937_64 rng(24);
    for (int k = 0; k < 500; ++k) {
      const int n = gen::between(1, 6, rng);
      const Permutation x = gen::permutation(2 * n, rng), y = gen::permutation(2 * n, rng);
      check_shrink(x, y, n);
      const CompressResult c = compress(x, y);
      const int m = magnitude(x, y);
      CHECK(c.rank <= m);
      CHECK(c.pair.x.largest_moved_point() <= 2 * c.rank);
      CHECK(c.pair.y.largest_moved_point() <= 2 * c.rank);
      CHECK(magnitude(c.pair.x, c.pair.y) == m);
      const int big = std::max({n, c.rank, c.pair.a.degree() / 2, c.pair.b.degree() / 2});
      CHECK(is_in_B(c.pair.a.padded(2 * big), big));
      CHECK(is_in_B(c.pair.b.padded(2 * big), big));
      CHECK(c.pair.a * x * c.pair.b.inverse() == c.pair.x);
      CHECK(c.pair.b * y * c.pair.a.inverse() == c.pair.y);
    }
  }
}
