#pragma once

#include <array>
#include <map>
#include <unordered_map>
#include <vector>

#include "uat/constructions.hpp"
#include "uat/scalar.hpp"

namespace uat {

using Triple = std::array<Scalar, 3>;

struct TripleHash {
  std::size_t operator()(const Triple& t) const;
};

// The plane (c-b)x + (a-c)y + (b-a)z = 2 attached to (a,b,c).  Coefficients
// sum to zero, so the direction (1,1,1) lies in the plane; two triples give
// the same plane exactly when they differ by a multiple of (1,1,1).
struct GridPlane {
  Scalar cx, cy, cz;  // right-hand side is always 2

  bool operator==(const GridPlane& other) const {
    return cx == other.cx && cy == other.cy && cz == other.cz;
  }
};

GridPlane plane_of(const Triple& p);  // rejects a = b = c (degenerate plane)

// Multiplicity of p within the value set: the number of shifts t with
// p + (t,t,t) still inside values^3.  Always at least 1 (t = 0).
long shift_multiplicity(const Triple& p, const std::vector<Scalar>& values);

// All diagonal-line classes of values^3, keyed by the representative with the
// smallest reachable first coordinate; class multiplicities sum to |values|^3.
struct MultiplicityTable {
  std::unordered_map<Triple, long, TripleHash> classes;
};

MultiplicityTable multiplicity_table(const std::vector<Scalar>& values);

// delta(s) = number of representations s = x - y.
struct DeltaHistogram {
  std::unordered_map<Scalar, long long, ScalarHash> counts;

  // Number of difference values s with delta(s) >= tau.
  long long m_at_least(long long tau) const;
};

DeltaHistogram delta_histogram(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

// Unit-area triangles of the grid A x B split by whether the abscissa triple
// (in A^3) and the ordinate triple (in B^3) are k-rich (multiplicity >= k).
struct PartitionedCount {
  unsigned long long rich_rich = 0;
  unsigned long long rich_poor = 0;
  unsigned long long poor_rich = 0;
  unsigned long long poor_poor = 0;
  double elapsed_ms = 0.0;

  unsigned long long total() const { return rich_rich + rich_poor + poor_rich + poor_poor; }
};

PartitionedCount rich_poor_partition(const ConvexSet& a, const ConvexSet& b, long k);
PartitionedCount rich_poor_partition_serial(const ConvexSet& a, const ConvexSet& b, long k);

// Number of k-rich points of values^3 plus the dyadic multiplicity histogram
// (bucket i counts points with 2^(i-1) <= multiplicity < 2^i).
struct RichCensus {
  long long rich_points = 0;
  std::map<int, long long> dyadic_histogram;
};

RichCensus rich_point_census(const std::vector<Scalar>& values, long k);

}  // namespace uat
