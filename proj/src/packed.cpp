#include "hecke/packed.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "hecke/errors.hpp"

namespace hecke {

Word identity_word() {
  Word w;
  for (int i = 0; i < kMaxPackedDegree; ++i) w.v[i] = static_cast<std::uint8_t>(i);
  return w;
}

Word to_word(const Permutation& x) {
  if (x.largest_moved_point() > kMaxPackedDegree)
    throw DomainError("packed kernels support degree <= 16, got a permutation moving " +
                      std::to_string(x.largest_moved_point()));
  Word w = identity_word();
  const int top = std::min(x.degree(), kMaxPackedDegree);
  for (int i = 1; i <= top; ++i) w.v[i - 1] = static_cast<std::uint8_t>(x(i) - 1);
  return w;
}

Permutation from_word(const Word& w, int degree) {
  std::vector<int> images(std::max(degree, 1));
  for (int i = 0; i < static_cast<int>(images.size()); ++i)
    images[i] = i < kMaxPackedDegree ? w.v[i] + 1 : i + 1;
  return Permutation(std::move(images));
}

std::uint64_t coset_key_of(const Partition& stable_type) {
  std::uint64_t key = 0;
  for (int p : stable_type.parts()) {
    if (p >= kMaxPackedDegree) throw DomainError("stable part too large for a key");
    key += 1ull << (4 * p);
  }
  return key;
}

Partition partition_of_key(std::uint64_t key) {
  std::vector<int> parts;
  for (int s = kMaxPackedDegree - 1; s >= 1; --s) {
    const int count = static_cast<int>((key >> (4 * s)) & 0xF);
    parts.insert(parts.end(), count, s);
  }
  return Partition(std::move(parts));
}

CosetTypeIndex::CosetTypeIndex(int n) : n_(n) {
  for (const auto& full : partitions_of(n)) {
    types_.push_back(full.stabilized());
    keys_.push_back(coset_key_of(types_.back()));
  }
}

std::uint64_t rank_count(int degree) { return saturating_factorial(degree); }

Word unrank(int degree, std::uint64_t rank) {
  if (degree > kMaxPackedDegree) throw DomainError("unrank: degree above 16");
  Word w = identity_word();
  std::vector<std::uint8_t> pool(w.v.begin(), w.v.begin() + degree);
  for (int i = 0; i < degree; ++i) {
    const std::uint64_t f = saturating_factorial(degree - 1 - i);
    const std::uint64_t digit = rank / f;
    rank %= f;
    w.v[i] = pool[digit];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return w;
}

std::uint64_t rank_of(const Word& w, int degree) {
  std::uint64_t rank = 0;
  for (int i = 0; i < degree; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < degree; ++j) smaller += w.v[j] < w.v[i];
    rank += static_cast<std::uint64_t>(smaller) * saturating_factorial(degree - 1 - i);
  }
  return rank;
}

void run_shards(std::uint64_t total, int shards,
                const std::function<void(int, std::uint64_t, std::uint64_t)>& body) {
  shards = std::max(shards, 1);
  auto bound = [&](int s) {
    // total * s / shards without overflow for total < 2^64 / 64.
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(total) * static_cast<unsigned>(s)) /
        static_cast<unsigned>(shards));
  };
  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1,
                                 shards);
  if (workers == 1) {
    for (int s = 0; s < shards; ++s) body(s, bound(s), bound(s + 1));
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int s = next++; s < shards && !failed; s = next++) {
        try {
          body(s, bound(s), bound(s + 1));
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace hecke
