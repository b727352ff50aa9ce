#include "hecke/bigint.hpp"

#include "hecke/errors.hpp"

namespace hecke {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt pow2(int e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

BigInt hyperoctahedral_order(int n) { return pow2(n) * factorial(n); }

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0) throw ConsistencyError(std::string(what) + ": division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw ConsistencyError(std::string(what) + ": " + num.str() + " / " +
                           den.str() + " is not an integer");
  return q;
}

}  // namespace hecke
