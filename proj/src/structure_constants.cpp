#include "hecke/structure_constants.hpp"

#include <algorithm>

#include "hecke/coset.hpp"
#include "hecke/errors.hpp"
#include "hecke/packed.hpp"

namespace hecke {

std::string to_string(Method method) {
  switch (method) {
    case Method::conv: return "conv";
    case Method::factor: return "factor";
    case Method::mainlemma: return "mainlemma";
    case Method::orbit: return "orbit";
  }
  return "?";
}

Method parse_method(const std::string& text) {
  if (text == "conv") return Method::conv;
  if (text == "factor") return Method::factor;
  if (text == "mainlemma") return Method::mainlemma;
  if (text == "orbit") return Method::orbit;
  throw ParseError("unknown method '" + text + "'");
}

namespace {

void require_packable(int n) {
  if (n < 1 || 2 * n > kMaxPackedDegree)
    throw DomainError("counting passes support 1 <= n <= 8, got n = " + std::to_string(n));
}

bool infeasible(const Partition& mu, const Partition& lambda, const Partition& nu, int n) {
  return mu.weight() > n || lambda.weight() > n || nu.weight() > n;
}

Word target_word(const Partition& nu) { return to_word(canonical_rep(nu)); }

// counts[i * T + j] = #{(x, z) : x in S_2n, z in targets, type(x) = i,
// type(x^-1 z) = j}. type(x) is read off x itself (the coset type of x and
// of x^-1 agree); type(x^-1 z) from its inverse z^-1 x.
std::vector<std::uint64_t> type_histogram(int n, const CosetTypeIndex& index,
                                          const std::vector<Word>& targets,
                                          std::optional<std::uint64_t> mu_key,
                                          const CountOptions& opts) {
  require_packable(n);
  const int deg = 2 * n;
  const int t = index.size();
  const std::uint64_t total = rank_count(deg);
  opts.budget.require(saturating_mul(total, std::max<std::uint64_t>(targets.size(), 1)),
                      "factor pass over S_" + std::to_string(deg));

  std::vector<Word> z_inv;
  for (const Word& z : targets) z_inv.push_back(inverse(z));

  const int shards = std::max(opts.shards, 1);
  std::vector<std::vector<std::uint64_t>> partial(shards,
                                                  std::vector<std::uint64_t>(t * t, 0));
  run_shards(total, shards, [&](int s, std::uint64_t lo, std::uint64_t hi) {
    auto& h = partial[s];
    std::uint8_t lhs[kMaxPackedDegree], rhs[kMaxPackedDegree];
    for_each_in_rank_range(deg, lo, hi, [&](const Word& x) {
      for (int i = 0; i < n; ++i) {
        lhs[i] = x.v[2 * i] >> 1;
        rhs[i] = x.v[2 * i + 1] >> 1;
      }
      const std::uint64_t kx = stable_coset_key(lhs, rhs, n);
      if (mu_key && kx != *mu_key) return;
      const int ix = index.index_of(kx);
      for (const Word& zi : z_inv) {
        for (int i = 0; i < n; ++i) {
          lhs[i] = zi.v[x.v[2 * i]] >> 1;
          rhs[i] = zi.v[x.v[2 * i + 1]] >> 1;
        }
        ++h[ix * t + index.index_of(stable_coset_key(lhs, rhs, n))];
      }
    });
  });

  std::vector<std::uint64_t> sum(t * t, 0);
  for (const auto& h : partial)
    for (int i = 0; i < t * t; ++i) sum[i] += h[i];
  return sum;
}

constexpr std::size_t kMaxTargets = 32;

// counts[k] = #{(x, y) in xs x ys : x y = targets[k]}.
std::vector<std::uint64_t> conv_counts(const std::vector<Word>& xs,
                                       const std::vector<Word>& ys,
                                       const std::vector<Word>& targets,
                                       const CountOptions& opts) {
  opts.budget.require(saturating_mul(xs.size(), ys.size()), "convolution pass");
  if (targets.size() > kMaxTargets) throw DomainError("convolution pass: too many targets");
  const int shards = std::max(opts.shards, 1);
  const std::size_t k = targets.size();
  std::vector<std::vector<std::uint64_t>> partial(shards, std::vector<std::uint64_t>(k, 0));
  run_shards(xs.size(), shards, [&](int s, std::uint64_t lo, std::uint64_t hi) {
    auto& c = partial[s];
#if defined(__SSSE3__)
    __m128i tv[kMaxTargets];
    for (std::size_t j = 0; j < k; ++j)
      tv[j] = _mm_load_si128(reinterpret_cast<const __m128i*>(targets[j].v.data()));
    for (std::uint64_t i = lo; i < hi; ++i) {
      const __m128i xv = _mm_load_si128(reinterpret_cast<const __m128i*>(xs[i].v.data()));
      for (const Word& y : ys) {
        const __m128i p = _mm_shuffle_epi8(
            xv, _mm_load_si128(reinterpret_cast<const __m128i*>(y.v.data())));
        for (std::size_t j = 0; j < k; ++j)
          if (_mm_movemask_epi8(_mm_cmpeq_epi8(p, tv[j])) == 0xFFFF) ++c[j];
      }
    }
#else
    for (std::uint64_t i = lo; i < hi; ++i)
      for (const Word& y : ys) {
        const Word p = compose(xs[i], y);
        for (std::size_t j = 0; j < k; ++j)
          if (p == targets[j]) ++c[j];
      }
#endif
  });
  std::vector<std::uint64_t> sum(k, 0);
  for (const auto& c : partial)
    for (std::size_t j = 0; j < k; ++j) sum[j] += c[j];
  return sum;
}

std::vector<Word> words_of_K(const Partition& mu, int n, const Budget& budget) {
  std::vector<Word> out;
  for_each_K(mu, n, KMode::closure, [&](const Permutation& x) { out.push_back(to_word(x)); },
             budget);
  return out;
}

}  // namespace

BigInt b_conv(const Partition& mu, const Partition& lambda, const Partition& nu, int n,
              const CountOptions& opts) {
  if (infeasible(mu, lambda, nu, n)) return 0;
  require_packable(n);
  const auto xs = words_of_K(mu, n, opts.budget);
  const auto ys = words_of_K(lambda, n, opts.budget);
  return BigInt(conv_counts(xs, ys, {target_word(nu)}, opts)[0]);
}

BigInt b_factor_at(const Partition& mu, const Partition& lambda, const Permutation& z,
                   int n, const CountOptions& opts) {
  if (mu.weight() > n || lambda.weight() > n) return 0;
  require_packable(n);
  const CosetTypeIndex index(n);
  const auto h = type_histogram(n, index, {to_word(z)}, coset_key_of(mu), opts);
  return BigInt(h[index.index_of(mu) * index.size() + index.index_of(lambda)]);
}

BigInt b_factor(const Partition& mu, const Partition& lambda, const Partition& nu, int n,
                const CountOptions& opts) {
  if (infeasible(mu, lambda, nu, n)) return 0;
  return b_factor_at(mu, lambda, canonical_rep(nu), n, opts);
}

MainLemmaResult b_mainlemma(const Partition& mu, const Partition& lambda,
                            const Partition& nu, int n, const CountOptions& opts) {
  MainLemmaResult out;
  if (infeasible(mu, lambda, nu, n)) return out;
  require_packable(n);
  const auto targets = restricted_K(nu, nu.weight(), n, opts.budget);
  out.denominator = restricted_class_size(nu, n);
  if (BigInt(targets.size()) != out.denominator)
    throw ConsistencyError("restricted class of " + nu.to_string() + " has " +
                           std::to_string(targets.size()) + " members, formula gives " +
                           to_decimal(out.denominator));
  std::vector<Word> words;
  for (const auto& z : targets) words.push_back(to_word(z));
  const CosetTypeIndex index(n);
  const auto h = type_histogram(n, index, words, coset_key_of(mu), opts);
  out.numerator = h[index.index_of(mu) * index.size() + index.index_of(lambda)];
  out.b = exact_div(out.numerator, out.denominator, "main lemma quotient");
  return out;
}

std::vector<OrbitTerm> orbit_terms(const Partition& mu, const Partition& lambda,
                                   const Partition& nu, const CountOptions& opts) {
  const int base = std::max(mu.weight() + lambda.weight() + nu.weight(), 1);
  std::vector<OrbitTerm> out;
  const OrbitCount counted = count_orbits(mu, lambda, nu, base, Target::restricted,
                                          opts.budget);
  for (const auto& s : counted.orbits) {
    Orbit orbit = orbit_of(s.representative, base, Action::revert, opts.budget);
    if (BigInt(orbit.members.size()) != s.size)
      throw ConsistencyError("slice count and BFS disagree on the orbit of " +
                             to_string(s.representative));
    OrbitTerm term{std::move(orbit.record), s.size};
    extract_k(term.record, Anchor::min_rank, opts.budget);
    extract_k(term.record, Anchor::magnitude, opts.budget);
    out.push_back(std::move(term));
  }
  return out;
}

BigInt b_orbit(const Partition& mu, const Partition& lambda, const Partition& nu, int n,
               const CountOptions& opts) {
  const int m_v = mu.weight() + lambda.weight() + nu.weight();
  if (n < m_v)
    throw UnsupportedRange("orbit method needs n >= m_V = " + std::to_string(m_v));
  BigInt sum = 0;
  for (const auto& term : orbit_terms(mu, lambda, nu, opts))
    sum += predicted_size(term.record, n, Anchor::min_rank);
  return exact_div(sum, restricted_class_size(nu, n), "orbit method quotient");
}

StructEntry compute_entry(const Partition& mu, const Partition& lambda, const Partition& nu,
                          int n, Method method, const CountOptions& opts) {
  StructEntry e{mu, lambda, nu, n, 0, method};
  switch (method) {
    case Method::conv: e.b = b_conv(mu, lambda, nu, n, opts); break;
    case Method::factor: e.b = b_factor(mu, lambda, nu, n, opts); break;
    case Method::mainlemma: e.b = b_mainlemma(mu, lambda, nu, n, opts).b; break;
    case Method::orbit: e.b = b_orbit(mu, lambda, nu, n, opts); break;
  }
  return e;
}

TripleTable conv_table(int n, const CountOptions& opts) {
  require_packable(n);
  const CosetTypeIndex index(n);
  const int t = index.size();
  std::vector<std::vector<Word>> classes(t);
  for_each_permutation(2 * n, opts.budget, [&](const Word& w) {
    classes[index.index_of(coset_key(w, n))].push_back(w);
  });
  std::vector<Word> targets;
  for (const auto& nu : index.partitions()) targets.push_back(target_word(nu));

  TripleTable table;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      const auto c = conv_counts(classes[i], classes[j], targets, opts);
      for (int k = 0; k < t; ++k)
        table[{index.partition(i), index.partition(j), index.partition(k)}] = c[k];
    }
  return table;
}

TripleTable factor_table(int n, const CountOptions& opts) {
  require_packable(n);
  const CosetTypeIndex index(n);
  const int t = index.size();
  TripleTable table;
  for (int k = 0; k < t; ++k) {
    const auto h =
        type_histogram(n, index, {target_word(index.partition(k))}, std::nullopt, opts);
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        table[{index.partition(i), index.partition(j), index.partition(k)}] = h[i * t + j];
  }
  return table;
}

TripleTable mainlemma_numerator_table(int n, const CountOptions& opts) {
  require_packable(n);
  const CosetTypeIndex index(n);
  const int t = index.size();
  TripleTable table;
  for (int k = 0; k < t; ++k) {
    const Partition& nu = index.partition(k);
    std::vector<Word> words;
    for (const auto& z : restricted_K(nu, nu.weight(), n, opts.budget))
      words.push_back(to_word(z));
    const auto h = type_histogram(n, index, words, std::nullopt, opts);
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        table[{index.partition(i), index.partition(j), nu}] = h[i * t + j];
  }
  return table;
}

namespace {

// b / (2^{n-e} n!) as an exact rational.
Rational normalize(const BigInt& b, int n, int e) {
  Rational den = Rational(factorial(n));
  if (n >= e)
    den *= Rational(pow2(n - e));
  else
    den /= Rational(pow2(e - n));
  return Rational(b) / den;
}

}  // namespace

FitResult fit_stability(std::vector<FitPoint> points, int w_nu,
                        std::optional<int> degree_bound) {
  std::sort(points.begin(), points.end(),
            [](const FitPoint& a, const FitPoint& b) { return a.n < b.n; });
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].n == points[i - 1].n)
      throw DomainError("fit: repeated n = " + std::to_string(points[i].n));
  if (points.size() < 2) throw DomainError("fit: insufficient points (need at least 2)");

  FitResult out;
  out.degree_bound = degree_bound;
  std::vector<std::pair<Rational, Rational>> g;
  for (const auto& p : points) {
    const Rational v = normalize(p.b, p.n, w_nu);
    g.emplace_back(Rational(p.n), v);
    out.normalized.emplace_back(p.n, v);
  }

  const std::size_t k = points.size();
  for (std::size_t start = 0; start + 2 <= k && !out.stable; ++start) {
    const std::size_t len = k - start;
    for (std::size_t d = 0; d + 2 <= len; ++d) {
      // Interpolate the last d + 1 points, hold out the rest of the suffix.
      std::vector<std::pair<Rational, Rational>> basis(g.end() - (d + 1), g.end());
      RationalPolynomial f = RationalPolynomial::interpolate(basis);
      bool fits = true;
      for (std::size_t i = start; i < k && fits; ++i) fits = f.evaluate(g[i].first) == g[i].second;
      if (!fits) continue;
      out.stable = true;
      out.f = std::move(f);
      out.window_start = points[start].n;
      out.window_end = points.back().n;
      for (std::size_t i = 0; i < start; ++i)
        out.residuals.emplace_back(points[i].n, g[i].second - out.f.evaluate(g[i].first));
      break;
    }
  }
  if (!out.stable) return out;

  Rational factor = 1;
  if (w_nu >= 1)
    factor /= Rational(pow2(w_nu - 1));
  else
    factor *= 2;
  out.remark = out.f.scaled(factor);
  out.remark_holds = true;
  for (const auto& p : points)
    if (p.n >= out.window_start)
      out.remark_holds = out.remark_holds &&
                         normalize(p.b, p.n, 1) == out.remark.evaluate(Rational(p.n));
  if (degree_bound) out.within_bound = out.f.degree() <= *degree_bound;
  return out;
}

}  // namespace hecke
