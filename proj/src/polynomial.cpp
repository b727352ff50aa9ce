#include "hecke/polynomial.hpp"

#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::interpolate(
    const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t k = points.size();
  // Newton divided differences, then expand the Newton form.
  std::vector<Rational> diff(k);
  for (std::size_t i = 0; i < k; ++i) diff[i] = points[i].second;
  for (std::size_t level = 1; level < k; ++level) {
    for (std::size_t i = k - 1; i >= level; --i) {
      const Rational dx = points[i].first - points[i - level].first;
      if (dx == 0) throw DomainError("interpolate: repeated abscissa");
      diff[i] = (diff[i] - diff[i - 1]) / dx;
      if (i == level) break;
    }
  }
  std::vector<Rational> coeffs;
  for (std::size_t i = k; i-- > 0;) {
    // coeffs = coeffs * (x - x_i) + diff[i]
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * points[i].first;
    }
    next[0] += diff[i];
    coeffs = std::move(next);
  }
  return RationalPolynomial(std::move(coeffs));
}

bool RationalPolynomial::is_integral() const {
  for (const auto& c : coeffs_)
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::scaled(const Rational& factor) const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= factor;
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[d];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0 || mag != 1) {
      os << mag;
      if (d > 0) os << " ";
    }
    if (d >= 1) os << var;
    if (d >= 2) os << "^" << d;
  }
  return os.str();
}

}  // namespace hecke
