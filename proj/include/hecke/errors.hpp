#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hecke {

// Precondition violated by the caller (degree too large, partition not
// contained in another, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed permutation or partition text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A counting pass or enumeration would exceed the configured budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t requested,
                std::uint64_t budget)
      : std::runtime_error(what + " (requested " + std::to_string(requested) +
                           ", budget " + std::to_string(budget) + ")"),
        requested_(requested),
        budget_(budget) {}

  std::uint64_t requested() const { return requested_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t requested_;
  std::uint64_t budget_;
};

// An identity that must hold exactly did not (non-integral division,
// a constructive step that failed its postcondition).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The requested n lies outside the range where a formula is trusted.
class UnsupportedRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace hecke
