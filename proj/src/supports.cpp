#include "hecke/supports.hpp"

#include <algorithm>

#include "hecke/errors.hpp"
#include "hecke/hyperoctahedral.hpp"

namespace hecke {

namespace {

int couple_count(const Permutation& x) { return (x.degree() + 1) / 2; }

Permutation transposition(int i, int j, int degree) {
  return Permutation::from_cycles({{i, j}}, degree);
}

void require_in_B(const Permutation& b, int n, const char* where) {
  if (!is_in_B(b, n))
    throw ConsistencyError(std::string(where) + ": multiplier " + b.to_string() +
                           " is not in B_" + std::to_string(n));
}

}  // namespace

PointSet support(const Permutation& x) {
  PointSet s;
  for (int i = 1; i <= x.degree(); ++i)
    if (x(i) != i) s.insert(i);
  return s;
}

PointSet couple_support(const Permutation& x) {
  PointSet d;
  for (int i = 1; i <= couple_count(x); ++i)
    if (partner(x(2 * i - 1)) != x(2 * i)) d.insert(i);
  return d;
}

PointSet unpaired_support(const Permutation& x) {
  PointSet ds;
  for (int i : couple_support(x)) {
    ds.insert(2 * i - 1);
    ds.insert(2 * i);
  }
  return ds;
}

SupportProfile profile(const Permutation& x) {
  SupportProfile p;
  p.support = support(x);
  p.couples = couple_support(x);
  for (int i : p.couples) {
    p.unpaired.insert(2 * i - 1);
    p.unpaired.insert(2 * i);
  }
  return p;
}

PointSet partners_of(const PointSet& points) {
  PointSet out;
  for (int k : points) out.insert(partner(k));
  return out;
}

PointSet completed_support(const Permutation& x, const Permutation& y) {
  const PointSet s = support(x * y);
  PointSet cs = s;
  for (int k : s) cs.insert(partner(k));
  cs.merge(unpaired_support(x));
  cs.merge(unpaired_support(y));
  return cs;
}

int magnitude(const Permutation& x, const Permutation& y) {
  const PointSet s = support(x * y);
  const auto twice = s.size() + partners_of(s).size() +
                     unpaired_support(x).size() + unpaired_support(y).size();
  return static_cast<int>(twice / 2);
}

int product_weight(const Permutation& x, const Permutation& y) {
  return (x * y).support_size();
}

StraightenResult straighten(const Permutation& x, int n) {
  if (x.largest_moved_point() > 2 * n)
    throw DomainError("straighten: permutation moves a point above 2n");
  const int deg = 2 * n;
  Permutation cur = x.padded(deg);
  Permutation left = Permutation::identity(deg);
  Permutation right = Permutation::identity(deg);
  const PointSet d0 = couple_support(x);

  // Couples mapped onto couples but not fixed pointwise.
  for (int j = 1; j <= n; ++j) {
    const int lo = 2 * j - 1, hi = 2 * j;
    if (cur(lo) == lo && cur(hi) == hi) continue;
    if (couple_support(cur).contains(j)) continue;
    Permutation b = cur(lo) != hi
                        ? Permutation::from_cycles({{lo, cur(lo)}, {hi, cur(hi)}}, deg)
                        : transposition(lo, hi, deg);
    require_in_B(b, n, "straighten");
    cur = b * cur;
    left = b * left;
  }

  // Fixed points inside DS.
  for (int j = 1; j <= deg; ++j) {
    if (cur(j) != j) continue;
    if (!couple_support(cur).contains((j + 1) / 2)) continue;
    Permutation b = transposition(j, partner(j), deg);
    require_in_B(b, n, "straighten");
    cur = cur * b;
    right = right * b;
  }

  const SupportProfile prof = profile(cur);
  if (prof.couples != d0 || prof.support != prof.unpaired)
    throw ConsistencyError("straighten: postcondition failed for " + x.to_string());
  return {cur, left, right};
}

PairWitness shrink(const Permutation& x, const Permutation& y, int n) {
  if (x.largest_moved_point() > 2 * n || y.largest_moved_point() > 2 * n)
    throw DomainError("shrink: pair moves a point above 2n");
  const int deg = 2 * n;
  PairWitness w{x.padded(deg), y.padded(deg), Permutation::identity(deg),
                Permutation::identity(deg)};
  const PointSet cs = completed_support(x, y);
  const Permutation product = x * y;

  for (int round = 0; round <= deg * deg; ++round) {
    int i = 0;
    for (int k = 1; k <= deg; ++k)
      if (!cs.contains(k) && w.y(k) != k) {
        i = k;
        break;
      }
    if (i == 0) return w;

    const int j = w.y(i);
    Permutation b = j != partner(i)
                        ? Permutation::from_cycles({{i, j}, {partner(i), partner(j)}}, deg)
                        : transposition(i, j, deg);
    require_in_B(b, n, "shrink");
    // (id, b) .r (x, y) = (x b^-1, b y)
    w.x = w.x * b.inverse();
    w.y = b * w.y;
    w.b = b * w.b;
    if (w.x(i) != i || w.y(i) != i || !(w.x * w.y == product) ||
        completed_support(w.x, w.y) != cs)
      throw ConsistencyError("shrink: step at point " + std::to_string(i) +
                             " broke an invariant for (" + x.to_string() + ", " +
                             y.to_string() + ")");
  }
  throw ConsistencyError("shrink: did not terminate for (" + x.to_string() + ", " +
                         y.to_string() + ")");
}

CompressResult compress(const Permutation& x, const Permutation& y) {
  const int top = std::max({x.largest_moved_point(), y.largest_moved_point(), 2});
  const int n = (top + 1) / 2;
  PairWitness shrunk = shrink(x, y, n);
  const PointSet cs = completed_support(shrunk.x, shrunk.y);

  std::vector<int> inside, outside;
  for (int c = 1; c <= n; ++c)
    (cs.contains(2 * c - 1) ? inside : outside).push_back(c);

  // u sends couple inside[k] to couple k+1 and the untouched couples after them.
  std::vector<int> target(n);
  int next = 1;
  for (int c : inside) target[c - 1] = next++;
  for (int c : outside) target[c - 1] = next++;
  Permutation u = wreath_element(target, std::vector<bool>(n, false));

  const Permutation u_inv = u.inverse();
  const int rank = static_cast<int>(inside.size());
  const int deg = std::max(2 * rank, 2);
  CompressResult out{
      {(u * shrunk.x * u_inv).resized(deg), (u * shrunk.y * u_inv).resized(deg),
       u * shrunk.a, u * shrunk.b},
      u,
      rank};
  return out;
}

}  // namespace hecke
