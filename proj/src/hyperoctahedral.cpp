#include "hecke/hyperoctahedral.hpp"

#include <algorithm>
#include <numeric>

namespace hecke {

Permutation partner_involution(int n) {
  std::vector<int> images(2 * std::max(n, 1));
  for (int k = 1; k <= static_cast<int>(images.size()); ++k) images[k - 1] = partner(k);
  return Permutation(std::move(images));
}

bool is_in_B(const Permutation& x, int n) {
  if (x.largest_moved_point() > 2 * n)
    throw DomainError("permutation moves a point above 2n = " +
                      std::to_string(2 * n));
  for (int i = 1; i <= n; ++i) {
    const int a = x(2 * i - 1);
    const int b = x(2 * i);
    if (partner(a) != b) return false;
  }
  return true;
}

Permutation wreath_element(const std::vector<int>& couple_perm,
                           const std::vector<bool>& flips) {
  const int n = static_cast<int>(couple_perm.size());
  std::vector<int> images(2 * std::max(n, 1));
  if (n == 0) return Permutation::identity(2);
  for (int i = 1; i <= n; ++i) {
    const int target = couple_perm[i - 1];
    const bool flip = flips[i - 1];
    images[2 * i - 2] = flip ? 2 * target : 2 * target - 1;
    images[2 * i - 1] = flip ? 2 * target - 1 : 2 * target;
  }
  return Permutation(std::move(images));
}

void for_each_B(int n, const std::function<void(const Permutation&)>& visit,
                const Budget& budget) {
  if (n < 1) throw DomainError("B_n needs n >= 1");
  if (n > 8 && !budget.force)
    throw ResourceError("enumerating B_n beyond n = 8 needs --force",
                        saturating_mul(saturating_factorial(n), 1ull << std::min(n, 63)),
                        budget.elements);
  budget.require(saturating_mul(saturating_factorial(n), 1ull << std::min(n, 63)),
                 "enumerating B_" + std::to_string(n));

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<bool> flips(n);
  do {
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      for (int i = 0; i < n; ++i) flips[i] = (mask >> i) & 1u;
      visit(wreath_element(perm, flips));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<Permutation> enumerate_B(int n, const Budget& budget) {
  std::vector<Permutation> out;
  for_each_B(n, [&](const Permutation& b) { out.push_back(b); }, budget);
  return out;
}

std::vector<Permutation> generators_B(int n) {
  std::vector<Permutation> gens;
  for (int i = 1; i <= n; ++i)
    gens.push_back(Permutation::from_cycles({{2 * i - 1, 2 * i}}, 2 * n));
  for (int i = 1; i < n; ++i)
    gens.push_back(
        Permutation::from_cycles({{2 * i - 1, 2 * i + 1}, {2 * i, 2 * i + 2}}, 2 * n));
  return gens;
}

Permutation random_B(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<bool> flips(n);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < n; ++i) flips[i] = coin(rng);
  return wreath_element(perm, flips);
}

Permutation random_B(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_B(n, rng);
}

}  // namespace hecke
