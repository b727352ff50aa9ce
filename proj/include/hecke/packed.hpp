#pragma once

// Fixed-width permutations and the sharded exhaustive kernels that every
// counting pass runs on. Points are 0-based here; the public Permutation
// type stays 1-based.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "hecke/budget.hpp"
#include "hecke/permutation.hpp"

#if defined(__SSSE3__)
#include <tmmintrin.h>
#endif

namespace hecke {

inline constexpr int kMaxPackedDegree = 16;

// One-line images of {0..15}; entries at and above the working degree are
// the identity so composition never needs the degree.
struct alignas(16) Word {
  std::array<std::uint8_t, kMaxPackedDegree> v;

  friend bool operator==(const Word&, const Word&) = default;
};

Word identity_word();
// Throws DomainError when x moves a point above 16.
Word to_word(const Permutation& x);
Permutation from_word(const Word& w, int degree);

// (x * y)[i] = x[y[i]]
inline Word compose(const Word& x, const Word& y) {
  Word r;
#if defined(__SSSE3__)
  const __m128i xv = _mm_load_si128(reinterpret_cast<const __m128i*>(x.v.data()));
  const __m128i yv = _mm_load_si128(reinterpret_cast<const __m128i*>(y.v.data()));
  _mm_store_si128(reinterpret_cast<__m128i*>(r.v.data()), _mm_shuffle_epi8(xv, yv));
#else
  for (int i = 0; i < kMaxPackedDegree; ++i) r.v[i] = x.v[y.v[i]];
#endif
  return r;
}

inline Word inverse(const Word& x) {
  Word r;
  for (int i = 0; i < kMaxPackedDegree; ++i) r.v[x.v[i]] = static_cast<std::uint8_t>(i);
  return r;
}

// Lexicographic image order packed into 64 bits (point 0 in the top nibble).
inline std::uint64_t pack(const Word& w) {
  std::uint64_t bits = 0;
  for (int i = 0; i < kMaxPackedDegree; ++i) bits = (bits << 4) | w.v[i];
  return bits;
}

inline Word unpack(std::uint64_t bits) {
  Word w;
  for (int i = kMaxPackedDegree - 1; i >= 0; --i) {
    w.v[i] = static_cast<std::uint8_t>(bits & 0xF);
    bits >>= 4;
  }
  return w;
}

// Stable coset type in a 64-bit key: nibble s counts the components of the
// couple graph made of s + 1 couples (s >= 1). Straight edges are
// contracted, so this is a union-find over the n couples with one edge
// (lhs[i], rhs[i]) per curved edge.
inline std::uint64_t stable_coset_key(const std::uint8_t* lhs, const std::uint8_t* rhs,
                                      int n) {
  std::uint8_t parent[kMaxPackedDegree];
  std::uint8_t size[kMaxPackedDegree];
  for (int i = 0; i < n; ++i) {
    parent[i] = static_cast<std::uint8_t>(i);
    size[i] = 1;
  }
  auto find = [&](std::uint8_t u) {
    while (parent[u] != u) {
      parent[u] = parent[parent[u]];
      u = parent[u];
    }
    return u;
  };
  for (int i = 0; i < n; ++i) {
    std::uint8_t u = find(lhs[i]);
    std::uint8_t v = find(rhs[i]);
    if (u == v) continue;
    if (size[u] < size[v]) std::swap(u, v);
    parent[v] = u;
    size[u] = static_cast<std::uint8_t>(size[u] + size[v]);
  }
  std::uint64_t key = 0;
  for (int i = 0; i < n; ++i)
    if (parent[i] == i && size[i] >= 2) key += 1ull << (4 * (size[i] - 1));
  return key;
}

// Key of the stable coset type of x in S_2n. Curved edges join
// x^-1(2i) and x^-1(2i+1) (0-based), so the inverse is taken here.
inline std::uint64_t coset_key(const Word& x, int n) {
  const Word inv = inverse(x);
  std::uint8_t lhs[kMaxPackedDegree], rhs[kMaxPackedDegree];
  for (int i = 0; i < n; ++i) {
    lhs[i] = inv.v[2 * i] >> 1;
    rhs[i] = inv.v[2 * i + 1] >> 1;
  }
  return stable_coset_key(lhs, rhs, n);
}

std::uint64_t coset_key_of(const Partition& stable_type);
Partition partition_of_key(std::uint64_t key);

// Maps the stable coset types occurring in S_2n to dense indices.
class CosetTypeIndex {
 public:
  explicit CosetTypeIndex(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(keys_.size()); }
  // -1 if the key is not a stable type of S_2n.
  int index_of(std::uint64_t key) const {
    for (int i = 0; i < size(); ++i)
      if (keys_[i] == key) return i;
    return -1;
  }
  int index_of(const Partition& stable_type) const {
    return index_of(coset_key_of(stable_type));
  }
  const Partition& partition(int i) const { return types_[i]; }
  const std::vector<Partition>& partitions() const { return types_; }

 private:
  int n_;
  std::vector<std::uint64_t> keys_;
  std::vector<Partition> types_;
};

std::uint64_t rank_count(int degree);
// The permutation of {0..degree-1} with the given lexicographic rank.
Word unrank(int degree, std::uint64_t rank);
std::uint64_t rank_of(const Word& w, int degree);

// Runs body(shard, lo, hi) over a partition of [0, total) into `shards`
// contiguous ranges on up to hardware_concurrency worker threads. Callers
// keep one result slot per shard and merge in shard order.
void run_shards(std::uint64_t total, int shards,
                const std::function<void(int, std::uint64_t, std::uint64_t)>& body);

// Visits the permutations of {0..degree-1} with rank in [lo, hi), in
// lexicographic order.
template <class Visit>
void for_each_in_rank_range(int degree, std::uint64_t lo, std::uint64_t hi,
                            Visit&& visit) {
  if (lo >= hi) return;
  Word w = unrank(degree, lo);
  for (std::uint64_t r = lo; r < hi; ++r) {
    visit(static_cast<const Word&>(w));
    std::next_permutation(w.v.begin(), w.v.begin() + degree);
  }
}

// Every permutation of S_degree, serially. Budgeted.
template <class Visit>
void for_each_permutation(int degree, const Budget& budget, Visit&& visit) {
  budget.require(rank_count(degree), "enumerating S_" + std::to_string(degree));
  for_each_in_rank_range(degree, 0, rank_count(degree), visit);
}

}  // namespace hecke
