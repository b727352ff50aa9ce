#include <doctest.h>

#include "gen.hpp"
#include "hecke/coset.hpp"
#include "hecke/errors.hpp"
#include "hecke/hyperoctahedral.hpp"
#include "hecke/polynomial.hpp"
#include "hecke/structure_constants.hpp"

using namespace hecke;

namespace {

const Partition E{};
const Partition One{1};

std::vector<FitPoint> points_for(const Partition& mu, const Partition& lam, const Partition& nu,
                                 int lo, int hi) {
  std::vector<FitPoint> pts;
  for (int n = lo; n <= hi; ++n) pts.push_back({n, b_factor(mu, lam, nu, n)});
  return pts;
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("interpolation recovers the generating polynomial") {
    std::mt19937_64 rng(61);
    for (int k = 0; k < 50; ++k) {
      const int deg = gen::between(0, 5, rng);
      std::vector<Rational> c;
      for (int i = 0; i <= deg; ++i) c.emplace_back(gen::between(-9, 9, rng), gen::between(1, 4, rng));
      if (c.back() == 0) c.back() = 1;
      const RationalPolynomial p(c);
      std::vector<std::pair<Rational, Rational>> pts;
      for (int x = 0; x <= deg + 2; ++x) pts.emplace_back(x, p.evaluate(x));
      CHECK(RationalPolynomial::interpolate(pts) == p);
    }
    CHECK_THROWS_AS(RationalPolynomial::interpolate({{1, 2}, {1, 3}}), DomainError);
  }

  TEST_CASE("printing and predicates") {
    CHECK(RationalPolynomial({0, -1, 1}).to_string() == "n^2 - n");
    CHECK(RationalPolynomial({4}).to_string() == "4");
    CHECK(RationalPolynomial().to_string() == "0");
    CHECK(RationalPolynomial({0, 0, 0}).is_zero());
    CHECK(RationalPolynomial({0, Rational(3, 2), 0, Rational(1, 2)}).to_string() == "1/2 n^3 + 3/2 n");
    CHECK(RationalPolynomial({0, -1, 1}).scaled(2).to_string() == "2 n^2 - 2 n");
    CHECK(RationalPolynomial({1, Rational(1, 2)}).degree() == 1);
    CHECK_FALSE(RationalPolynomial({1, Rational(1, 2)}).is_integral());
    CHECK(RationalPolynomial({0, -1, 1}).is_integral());
    CHECK(RationalPolynomial().degree() == -1);
  }
}

TEST_SUITE("structure_constants") {
  TEST_CASE("worked values") {
    CHECK(b_conv(One, One, One, 2) == 8);
    CHECK(b_conv(One, One, E, 2) == 16);
    CHECK(b_conv(E, One, One, 2) == 8);
    CHECK(b_factor(One, One, One, 2) == 8);
    CHECK(b_factor(One, One, E, 3) == 288);
    CHECK(b_factor(One, One, Partition{3, 1}, 2) == 0);
    CHECK(b_factor(E, One, One, 3) == 48);
    const MainLemmaResult m = b_mainlemma(One, One, One, 2);
    CHECK(m.b == 8);
    CHECK(m.numerator == 32);
    CHECK(m.denominator == 4);
    const MainLemmaResult id = b_mainlemma(One, One, E, 2);
    CHECK(id.b == 16);
    CHECK(id.numerator == 16);
    CHECK(id.denominator == 1);
  }

  TEST_CASE("orbit method") {
    for (int n = 4; n <= 5; ++n) CHECK(b_orbit(One, One, E, n) == b_factor(One, One, E, n));
    for (int n = 4; n <= 5; ++n) CHECK(b_orbit(E, One, One, n) == hyperoctahedral_order(n));
    CHECK_THROWS_AS(b_orbit(One, One, E, 3), UnsupportedRange);
    const auto terms = orbit_terms(One, One, E);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].record.magnitude == 4);
    CHECK(terms[0].size_at_base == 4608);
  }

  TEST_CASE("tables agree") {
    for (int n = 1; n <= 3; ++n) {
      const TripleTable conv = conv_table(n);
      const TripleTable fac = factor_table(n);
      const TripleTable num = mainlemma_numerator_table(n);
      CHECK(conv == fac);
      for (const auto& [key, b] : fac) {
        const auto& [mu, lam, nu] = key;
        CHECK(num.at(key) == b * restricted_class_size(nu, n));
        if (nu.size() > mu.size() + lam.size()) CHECK(b == 0);
      }
    }
  }

  TEST_CASE("the count does not depend on the target in the class") {
    std::mt19937_64 rng(62);
    for (const auto& nu : partitions_with_weight_at_most(3)) {
      const Permutation z0 = canonical_rep(nu);
      for (int k = 0; k < 3; ++k) {
        const Permutation z = random_B(3, rng) * z0 * random_B(3, rng);
        CHECK(b_factor_at(One, One, z, 3) == b_factor(One, One, nu, 3));
      }
    }
  }

  TEST_CASE("shard count does not change any count") {
    for (int shards : {1, 2, 8}) {
      const CountOptions opts{Budget{}, shards};
      CHECK(b_factor(One, One, One, 4, opts) == b_factor(One, One, One, 4));
      CHECK(factor_table(3, opts) == factor_table(3));
      CHECK(conv_table(3, opts) == conv_table(3));
    }
  }

  TEST_CASE("budget and feasibility") {
    CHECK_THROWS_AS(b_factor(One, One, One, 5, CountOptions{Budget{1000}, 1}), ResourceError);
    CHECK(b_conv(One, One, Partition{3}, 2) == 0);
    CHECK(compute_entry(One, One, One, 2, Method::mainlemma).b == 8);
    CHECK(parse_method("orbit") == Method::orbit);
    CHECK(to_string(Method::conv) == "conv");
    CHECK_THROWS_AS(parse_method("fourier"), ParseError);
  }

  TEST_CASE("fitting") {
    std::vector<FitPoint> flat;
    for (int n = 2; n <= 5; ++n) flat.push_back({n, pow2(n - 2) * factorial(n) * 4});
    const FitResult c = fit_stability(flat, 2);
    CHECK(c.stable);
    CHECK(c.f.to_string() == "4");
    // Normalizing 2^n n! 4 by 2^{n-2} n! gives the constant 16.
    std::vector<FitPoint> scaled;
    for (int n = 2; n <= 5; ++n) scaled.push_back({n, pow2(n) * factorial(n) * 4});
    CHECK(fit_stability(scaled, 2).f.to_string() == "16");

    const FitResult f = fit_stability(points_for(One, One, E, 2, 5), 0, 4);
    CHECK(f.stable);
    CHECK(f.f.to_string() == "n^2 - n");
    CHECK(f.window_start <= 2);
    CHECK(f.within_bound);
    CHECK(f.remark_holds);
    CHECK(f.remark == f.f.scaled(2));

    const FitResult g = fit_stability(points_for(E, One, One, 2, 5), 2);
    CHECK(g.f.to_string() == "4");

    CHECK_FALSE(fit_stability({{2, 16}, {3, 288}, {4, 4608}}, 0).stable);
    CHECK_THROWS_AS(fit_stability({{2, 16}}, 0), DomainError);
    CHECK_THROWS_AS(fit_stability({{2, 16}, {2, 16}}, 0), DomainError);
  }
}
