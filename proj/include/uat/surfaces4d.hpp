#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "uat/geom2d.hpp"

namespace uat {

// Small exact 3x3 matrix, used for the projective charts below.
struct Mat3 {
  std::array<std::array<Scalar, 3>, 3> m;

  Scalar det() const;
  std::array<Scalar, 3> apply(const std::array<Scalar, 3>& v) const;
  Mat3 mul(const Mat3& other) const;
  // True when the two matrices differ by a nonzero scalar factor.
  bool proportional_to(const Mat3& other) const;
  bool operator==(const Mat3& other) const = default;
};

// Homogeneous matrix of the chart sending (x,y) to the unique (z,w) with
// locus_equal((a,b),(x,y),(c,d),(z,w)); convention (x0,x1,x2) = (1,x,y).
Mat3 projective_matrix(const Point2& p, const Point2& q);

// The two-dimensional surface in R^4 of pairs ((x,y),(z,w)) whose unit-area
// locus lines coincide: locus(p,(x,y)) == locus(q,(z,w)).  Stored as the
// defining pair plus its projective chart matrix.
struct SigmaSurface {
  Point2 p;
  Point2 q;
  Mat3 matrix;

  // Requires p and q to differ in both coordinates.
  SigmaSurface(Point2 p_, Point2 q_);
};

// Rational chart: (x,y) -> (z,w), undefined exactly on the line where the
// denominator vanishes (empty optional).
std::optional<Point2> sigma_map(const SigmaSurface& s, const Point2& xy);

// Exact membership test for ((x,y),(z,w)) = (u,v) on the surface of (p,q):
// slope and intercept of the two locus lines agree.  Coordinate coincidences
// that break the algebraic chart (u.x == p.x or v.x == q.x) fall back to
// comparing the two locus lines directly.
bool sigma_member(const Point2& p, const Point2& u, const Point2& q, const Point2& v);

struct SlantedReport {
  long probes = 0;
  long no_image = 0;  // probes on an excluded line (empty fiber)
  long failures = 0;
  std::vector<std::string> witnesses;
};

// Audits the finite-fiber property of a surface: each probe, read as (x,y)
// and as (z,w), must have at most one partner, the matrix must agree with the
// rational chart, and chart-then-inverse-chart must be the identity.
SlantedReport slanted_audit(const SigmaSurface& s, const std::vector<Point2>& probes);

struct PairIntersection {
  long count = 0;
  std::vector<std::pair<Point2, Point2>> witnesses;
};

// Counts pairs (u,v) from domain x domain, u != v, lying on both surfaces,
// with neither defining quadruple {p_i, q_i, u, v} fully collinear.  The
// expected bound for this count is 3.
PairIntersection pair_intersection_audit(const SigmaSurface& s1, const SigmaSurface& s2,
                                         const PointSet& domain);

struct Quadruple {
  Point2 p, u, q, v;
};

// Quadruples (p,u,q,v) whose two pairs share one locus line with a
// medium-rich point count (threshold <= points-on-line, and
// threshold * points-on-line <= n), where both spanning lines hold at most
// line_cap points.  Diagonal quadruples (p,u,p,u) are included.
struct QuadrupleSet {
  long threshold = 1;
  long line_cap = 1;
  std::vector<Quadruple> quadruples;
};

QuadrupleSet enumerate_Q(const PointSet& s, long threshold, long line_cap);

// For four collinear points with equal locus lines, checks the squared-length
// identity |pu|^2 == |qv|^2.  Throws DataError when the collinearity or
// locus-equality preconditions fail.
bool collinear_quadruple_check(const Point2& p, const Point2& u, const Point2& q,
                               const Point2& v);

// Aggregate audit used by the CLI: max pairwise intersection count over all
// surface pairs from a point set, slantedness failures over seeded probes,
// and proportional-matrix (duplicate surface) violations.
struct SurfaceAuditSummary {
  long surfaces = 0;
  long pairs_checked = 0;
  long max_pair_intersection = 0;
  long slanted_failures = 0;
  long duplicate_surfaces = 0;
  unsigned long long quadruples = 0;  // |Q| at the requested threshold
};

SurfaceAuditSummary audit_surfaces(const PointSet& s, long threshold, long line_cap,
                                   unsigned long long probe_seed);

}  // namespace uat
