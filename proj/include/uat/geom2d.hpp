#pragma once

#include <cstddef>
#include <vector>

#include "uat/scalar.hpp"

namespace uat {

struct Point2 {
  Scalar x;
  Scalar y;

  std::size_t hash() const;

  friend bool operator==(const Point2& p, const Point2& q) { return p.x == q.x && p.y == q.y; }
  friend bool operator!=(const Point2& p, const Point2& q) { return !(p == q); }
};

struct Point2Hash {
  std::size_t operator()(const Point2& p) const { return p.hash(); }
};

// Twice the signed area of the ordered triangle (p, q, r).  The triangle has
// unit area iff the result is +2 or -2; it is degenerate iff the result is 0.
Scalar signed_double_area(const Point2& p, const Point2& q, const Point2& r);

// Line a*x + b*y = c with (a, b) != (0, 0), scaled so that the first nonzero
// entry of (a, b) equals 1.  Two equal lines always carry identical field
// triples, so the type is a valid exact lookup key.
class CanonicalLine {
public:
  CanonicalLine(const Scalar& a, const Scalar& b, const Scalar& c);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }

  bool contains(const Point2& p) const;
  bool parallel_to(const CanonicalLine& o) const { return a_ == o.a_ && b_ == o.b_; }

  std::size_t hash() const;

  friend bool operator==(const CanonicalLine& l, const CanonicalLine& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }
  friend bool operator!=(const CanonicalLine& l, const CanonicalLine& r) { return !(l == r); }

private:
  Scalar a_;
  Scalar b_;
  Scalar c_;
};

struct CanonicalLineHash {
  std::size_t operator()(const CanonicalLine& l) const { return l.hash(); }
};

// The line through two distinct points.
CanonicalLine canonical_line_through(const Point2& p, const Point2& q);

// The locus {r : signed_double_area(p, q, r) = 2}, i.e. the parallel to pq
// at distance 2/|pq| on the positive-orientation side.
CanonicalLine unit_locus_line(const Point2& p, const Point2& q);

// Invertible affine map x -> M x + t.
struct AffineMap {
  Scalar m00, m01;
  Scalar m10, m11;
  Scalar t0, t1;

  Point2 apply(const Point2& p) const;
  Scalar det() const { return m00 * m11 - m01 * m10; }
  AffineMap inverse() const;
  CanonicalLine apply_line(const CanonicalLine& line) const;
};

// Ordered, duplicate-free list of points with an optional partition into
// labelled parts.
struct PointSet {
  std::vector<Point2> points;
  std::vector<int> parts;  // one label per point when num_parts > 0, else empty
  int num_parts = 0;

  std::size_t size() const { return points.size(); }
  bool partitioned() const { return num_parts > 0; }

  void add(Point2 p);
  void add(Point2 p, int part);
};

}  // namespace uat
