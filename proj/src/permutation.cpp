#include "hecke/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) images_.push_back(1);
  const int n = degree();
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v])
      throw DomainError("not a bijection of {1.." + std::to_string(n) + "}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(std::max(degree, 1));
  for (int i = 0; i < static_cast<int>(images.size()); ++i) images[i] = i + 1;
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles,
                                     int degree) {
  int n = std::max(degree, 1);
  for (const auto& c : cycles)
    for (int v : c) {
      if (v < 1) throw DomainError("cycle points must be positive");
      n = std::max(n, v);
    }
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  std::vector<bool> used(n + 1, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (used[c[k]]) throw DomainError("cycles are not disjoint");
      used[c[k]] = true;
      images[c[k] - 1] = c[(k + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

namespace {

std::vector<int> read_ints(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError("unexpected character '" + std::string(1, ch) +
                       "' in permutation");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw ParseError("point too large in permutation");
      ++i;
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

Permutation Permutation::parse(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty permutation");
  text.remove_prefix(first);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  if (text == "e" || text == "id") return identity();

  if (text.front() != '(') {
    auto images = read_ints(text);
    if (images.empty()) throw ParseError("empty permutation");
    try {
      return Permutation(std::move(images));
    } catch (const DomainError& e) {
      throw ParseError(std::string("one-line form: ") + e.what());
    }
  }

  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("expected '(' in cycle form");
    auto close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unbalanced '('");
    auto body = text.substr(i + 1, close - i - 1);
    if (body.find('(') != std::string_view::npos)
      throw ParseError("nested '(' in cycle form");
    auto points = read_ints(body);
    if (!points.empty()) cycles.push_back(std::move(points));
    i = close + 1;
  }
  try {
    return from_cycles(cycles);
  } catch (const DomainError& e) {
    throw ParseError(std::string("cycle form: ") + e.what());
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::padded(int degree) const {
  if (degree <= this->degree()) return *this;
  Permutation p = *this;
  for (int i = this->degree() + 1; i <= degree; ++i) p.images_.push_back(i);
  return p;
}

Permutation Permutation::resized(int degree) const {
  degree = std::max(degree, 1);
  if (degree >= this->degree()) return padded(degree);
  if (largest_moved_point() > degree)
    throw DomainError("cannot truncate a permutation that moves " +
                      std::to_string(largest_moved_point()) + " to degree " +
                      std::to_string(degree));
  Permutation p;
  p.images_.assign(images_.begin(), images_.begin() + degree);
  return p;
}

int Permutation::largest_moved_point() const {
  for (int i = degree(); i >= 1; --i)
    if (images_[i - 1] != i) return i;
  return 0;
}

int Permutation::support_size() const {
  int s = 0;
  for (int i = 0; i < degree(); ++i) s += images_[i] != i + 1;
  return s;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(degree() + 1, false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start] || images_[start - 1] == start) continue;
    std::vector<int> c;
    for (int v = start; !seen[v]; v = images_[v - 1]) {
      seen[v] = true;
      c.push_back(v);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

Permutation operator*(const Permutation& x, const Permutation& y) {
  const int n = std::max(x.degree(), y.degree());
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1] = x(y(i));
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool operator==(const Permutation& x, const Permutation& y) {
  const int n = std::max(x.degree(), y.degree());
  for (int i = 1; i <= n; ++i)
    if (x(i) != y(i)) return false;
  return true;
}

std::strong_ordering operator<=>(const Permutation& x, const Permutation& y) {
  const int n = std::max(x.degree(), y.degree());
  for (int i = 1; i <= n; ++i)
    if (auto c = x(i) <=> y(i); c != 0) return c;
  return std::strong_ordering::equal;
}

Partition stable_cycle_type(const Permutation& x) {
  std::vector<int> parts;
  for (const auto& c : x.cycles()) parts.push_back(static_cast<int>(c.size()) - 1);
  return Partition::from_unsorted(std::move(parts));
}

bool in_conjugacy_class(const Permutation& x, const Partition& lambda, int n) {
  if (x.largest_moved_point() > n)
    throw DomainError("permutation moves " + std::to_string(x.largest_moved_point()) +
                      ", beyond n = " + std::to_string(n));
  return stable_cycle_type(x) == lambda;
}

std::ostream& operator<<(std::ostream& os, const Permutation& x) {
  return os << x.to_string();
}

std::size_t PermutationHash::operator()(const Permutation& x) const {
  // Hash only up to the largest moved point so padded copies collide.
  std::size_t h = 1469598103934665603ull;
  const int top = x.largest_moved_point();
  for (int i = 1; i <= top; ++i) {
    h ^= static_cast<std::size_t>(x(i));
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace hecke
