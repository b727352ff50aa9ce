#pragma once

#include <set>

#include "hecke/permutation.hpp"

namespace hecke {

using PointSet = std::set<int>;

// S(x), D(x) (indices of couples sent to non-couples) and DS(x), the union
// of those couples. |DS| = 2|D| always.
struct SupportProfile {
  PointSet support;
  PointSet couples;
  PointSet unpaired;
};

PointSet support(const Permutation& x);
PointSet couple_support(const Permutation& x);
PointSet unpaired_support(const Permutation& x);
SupportProfile profile(const Permutation& x);

// t(S).
PointSet partners_of(const PointSet& points);

// CS(x, y) = S(xy) u t(S(xy)) u DS(x) u DS(y). Closed under t.
PointSet completed_support(const Permutation& x, const Permutation& y);

// m with 2m = |S(xy)| + |t(S(xy))| + |DS(x)| + |DS(y)|. Constant along
// reverted orbits; bounds |CS(x, y)| / 2 from above.
int magnitude(const Permutation& x, const Permutation& y);

// |S(xy)|, constant along reverted orbits.
int product_weight(const Permutation& x, const Permutation& y);

// result = left * x * right with left, right in B_n.
struct StraightenResult {
  Permutation result;
  Permutation left;
  Permutation right;
};

// A member y of B_n x B_n with D(y) = D(x) and S(y) = DS(y). First clears
// every couple that x maps onto a couple (left multiplication), then moves
// every fixed point of DS (right multiplication by (j t(j))). Couples and
// points are visited in ascending order. Throws ConsistencyError if a
// multiplier leaves B_n or a postcondition fails.
StraightenResult straighten(const Permutation& x, int n);

// (x, y) = (a, b) .r (x0, y0) = (a x0 b^-1, b y0 a^-1) for the input pair.
struct PairWitness {
  Permutation x;
  Permutation y;
  Permutation a;
  Permutation b;
};

// A member (x', y') of the reverted B_n x B_n orbit of (x, y) with
// S(x') u S(y') inside CS(x', y') = CS(x, y) and x'y' = xy.
PairWitness shrink(const Permutation& x, const Permutation& y, int n);

struct CompressResult {
  PairWitness pair;
  // The couple relabelling applied after shrinking: the k-th couple of
  // CS (ascending) goes to D_k, orientation kept.
  Permutation relabel;
  // |CS| / 2; both outputs fix every point above 2 * rank.
  int rank;
};

// Shrinks, then relabels the couples of CS onto D_1, D_2, ... by
// simultaneous conjugation. The result stays in the reverted orbit.
CompressResult compress(const Permutation& x, const Permutation& y);

}  // namespace hecke
