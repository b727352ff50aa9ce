#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hecke/bigint.hpp"

namespace hecke {

// Exact polynomial over the rationals, coefficients in ascending degree.
// The leading coefficient is nonzero; the zero polynomial has none.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  // The unique polynomial of degree < points.size() through the points.
  // Abscissae must be distinct (DomainError otherwise).
  static RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_integral() const;
  Rational evaluate(const Rational& x) const;
  RationalPolynomial scaled(const Rational& factor) const;

  // "n^2 - n", "4", "1/2 n^3 + 3/2 n", "0".
  std::string to_string(const std::string& var = "n") const;

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace hecke
