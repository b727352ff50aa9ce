#pragma once

#include <cstdint>
#include <string>

#include "hecke/errors.hpp"

namespace hecke {

// Ceiling on how many elements a single pass may enumerate. The default
// admits one pass over S_12 (12! = 479001600).
struct Budget {
  static constexpr std::uint64_t kDefaultElements = 500'000'000;

  std::uint64_t elements = kDefaultElements;
  // Lifts the rank guards (for instance B_n enumeration beyond n = 8).
  bool force = false;

  void require(std::uint64_t requested, const std::string& what) const {
    if (requested > elements) throw ResourceError(what, requested, elements);
  }
};

// n! as uint64, saturating at UINT64_MAX.
inline std::uint64_t saturating_factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) {
    if (r > UINT64_MAX / static_cast<std::uint64_t>(i)) return UINT64_MAX;
    r *= static_cast<std::uint64_t>(i);
  }
  return r;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace hecke
