#pragma once

#include <array>
#include <utility>
#include <vector>

#include "uat/geom2d.hpp"

namespace uat {

struct LineTriple {
  CanonicalLine l1;
  CanonicalLine l2;
  CanonicalLine l3;
};

enum class TripleCase { all_parallel, one_pair, none_parallel };

// Area-preserving change of frame for a triple of distinct lines.  The
// forward map (|det| = 1 exactly) sends the inputs onto the canonical frame
// of their parallelism class:
//
//   all_parallel:   y=0, y=1, y=alpha      (roles 0,1,2 in input order)
//   one_pair:       y=0, y=1, x=0          (roles: the parallel pair, then
//                                            the crossing line)
//   none_parallel:  x=0, y=0, x+y=alpha    (roles 0,1,2 in input order)
//
// order[role] is the index of the input line occupying that role; it is the
// identity except in the one_pair case, where the crossing line moves to the
// last role.  alpha is the frame parameter (unused for one_pair).
struct NormalizationResult {
  TripleCase kind;
  Scalar alpha;
  AffineMap forward;
  AffineMap inverse;
  std::array<int, 3> order;
};

NormalizationResult normalize_lines(const LineTriple& t);

// Tripartite sets on three parallel lines y=0, y=1, y=alpha; every (i, j)
// pair spans a unit-area triangle, so the restricted count is at least n^2.
PointSet three_parallel(long n, const Scalar& alpha);

// Tripartite sets on y=0, y=1 and the crossing line x=0; pairs with i != j
// span unit-area triangles, so the restricted count is at least n^2 - n.
PointSet one_parallel_pair(long n);

// Tripartite sets on y=0, x=0 and x+y=alpha (concurrency allowed); pairs
// with i != j span unit-area triangles; coordinates lie in the quadratic
// extension by sqrt(alpha^2 + 8).
PointSet general_position(long n, const Scalar& alpha);

// Normalizes the triple, builds the canonical construction for its class,
// and maps the points back; the part label of every output point is the
// index of the input line it lies on.
PointSet build_on_lines(const LineTriple& t, long n);

// ceil(sqrt(log2 n)) columns of the integer lattice, truncated to exactly
// n points in row-major order.
PointSet lattice_section(long n);

// The nonzero triangle area attained by the most point triples, with its
// count; ties break toward the smaller area.
std::pair<Scalar, long long> mode_area_count(const PointSet& s);

// Strictly increasing reals with strictly increasing consecutive gaps.
class ConvexSet {
public:
  explicit ConvexSet(std::vector<Scalar> values);
  const std::vector<Scalar>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

private:
  std::vector<Scalar> values_;
};

PointSet convex_grid(const ConvexSet& a, const ConvexSet& b);

// Seeded random rational points with pairwise distinct x and pairwise
// distinct y coordinates; numerators and denominators are bounded by
// coord_bound.
PointSet random_points(long n, unsigned long long seed, long coord_bound = 1000);

}  // namespace uat
