#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt pow2(int e);

// |B_n| = 2^n n!
BigInt hyperoctahedral_order(int n);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Exact quotient; throws ConsistencyError when the division leaves a
// remainder.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* what);

}  // namespace hecke
