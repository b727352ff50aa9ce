#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/structure_constants.hpp"

namespace hecke {

struct Failure {
  std::string module;
  std::string invariant;
  std::string counterexample;
};

struct VerifyReport {
  std::uint64_t checks = 0;
  std::vector<Failure> failures;
  // Failures beyond the stored ones are only counted.
  std::uint64_t dropped = 0;

  bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
  // Exhaustive passes run up to min(n_max, 3); randomized cases up to n_max.
  int n_max = 3;
  std::uint64_t seed = 20140601;
  int random_cases = 10000;
  CountOptions count;
};

// suite is one of supports, cosets, orbits, hecke, all (ParseError
// otherwise).
VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts);

const std::vector<std::string>& suite_names();

}  // namespace hecke
