#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hecke/bigint.hpp"
#include "hecke/budget.hpp"
#include "hecke/orbit.hpp"
#include "hecke/partition.hpp"
#include "hecke/polynomial.hpp"

namespace hecke {

enum class Method { conv, factor, mainlemma, orbit };

std::string to_string(Method method);
// Throws ParseError.
Method parse_method(const std::string& text);

struct StructEntry {
  Partition mu;
  Partition lambda;
  Partition nu;
  int n = 0;
  BigInt b;
  Method method = Method::factor;

  friend bool operator==(const StructEntry&, const StructEntry&) = default;
};

struct CountOptions {
  Budget budget;
  // Contiguous rank ranges, merged in shard order.
  int shards = 1;
};

// Pairs (x, y) in K_mu(n) x K_lambda(n) with x y = canonical_rep(nu).
BigInt b_conv(const Partition& mu, const Partition& lambda, const Partition& nu, int n,
              const CountOptions& opts = {});

// #{x in S_2n : mu_x = mu, stable type of x^-1 z0 = lambda}, one pass.
BigInt b_factor(const Partition& mu, const Partition& lambda, const Partition& nu, int n,
                const CountOptions& opts = {});

// Same count against an arbitrary target z in K_nu(n).
BigInt b_factor_at(const Partition& mu, const Partition& lambda, const Permutation& z,
                   int n, const CountOptions& opts = {});

struct MainLemmaResult {
  BigInt b;
  // |V(K_mu(n) x K_lambda(n); K^{w(nu)}_nu(n))|
  BigInt numerator;
  // |K^{w(nu)}_nu(n)|
  BigInt denominator;
};

// Factorizations summed over every z in K^{w(nu)}_nu(n), divided by the
// number of such z. The division must be exact.
MainLemmaResult b_mainlemma(const Partition& mu, const Partition& lambda,
                            const Partition& nu, int n, const CountOptions& opts = {});

struct OrbitTerm {
  OrbitRecord record;
  BigInt size_at_base;  // |L(m_V)| from the slice count
};

// The reverted orbits of V(m_V) with restricted target, m_V = w(mu) + w(lambda)
// + w(nu), each with its BFS record and both orbit constants extracted.
std::vector<OrbitTerm> orbit_terms(const Partition& mu, const Partition& lambda,
                                   const Partition& nu, const CountOptions& opts = {});

// Sum of predicted orbit sizes at n, over restricted_class_size(nu, n). Orbit
// sizes are extrapolated from each orbit's least rank. UnsupportedRange for
// n < m_V.
BigInt b_orbit(const Partition& mu, const Partition& lambda, const Partition& nu, int n,
               const CountOptions& opts = {});

StructEntry compute_entry(const Partition& mu, const Partition& lambda, const Partition& nu,
                          int n, Method method, const CountOptions& opts = {});

// b for every triple of stable types occurring at n, by one convolution
// pass per (mu, lambda).
using TripleTable = std::map<std::tuple<Partition, Partition, Partition>, BigInt>;
TripleTable conv_table(int n, const CountOptions& opts = {});
// Same table from one factor pass per nu.
TripleTable factor_table(int n, const CountOptions& opts = {});
// Numerators of the main-lemma identity, one pass per nu.
TripleTable mainlemma_numerator_table(int n, const CountOptions& opts = {});

struct FitPoint {
  int n;
  BigInt b;
};

struct FitResult {
  bool stable = false;
  // f with b(n) = 2^{n-w(nu)} n! f(n) on the window.
  RationalPolynomial f;
  // The same data normalized by 2^{n-1} n!; equals 2^{1-w(nu)} f.
  RationalPolynomial remark;
  int window_start = 0;
  int window_end = 0;
  // g(n) - f(n) at the points before the window.
  std::vector<std::pair<int, Rational>> residuals;
  // Normalized values g(n) at every point.
  std::vector<std::pair<int, Rational>> normalized;
  std::optional<int> degree_bound;
  bool within_bound = true;
  // b(n) / (2^{n-1} n!) = remark(n) at every window point.
  bool remark_holds = false;
};

// Minimal-degree polynomial through the longest suffix of points that some
// polynomial of degree <= suffix length - 2 fits. Needs at least two
// points with distinct n (DomainError otherwise).
FitResult fit_stability(std::vector<FitPoint> points, int w_nu,
                        std::optional<int> degree_bound = std::nullopt);

}  // namespace hecke
