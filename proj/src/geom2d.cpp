#include "uat/geom2d.hpp"

#include <algorithm>
#include <utility>

namespace uat {

namespace {

std::size_t hash_pair(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

}  // namespace

std::size_t Point2::hash() const { return hash_pair(x.hash(), y.hash()); }

Scalar signed_double_area(const Point2& p, const Point2& q, const Point2& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

CanonicalLine::CanonicalLine(const Scalar& a, const Scalar& b, const Scalar& c) {
  if (!a.is_zero()) {
    a_ = Scalar(1);
    b_ = b / a;
    c_ = c / a;
  } else if (!b.is_zero()) {
    a_ = Scalar(0);
    b_ = Scalar(1);
    c_ = c / b;
  } else {
    throw std::domain_error("degenerate line: both coefficients are zero");
  }
}

bool CanonicalLine::contains(const Point2& p) const { return a_ * p.x + b_ * p.y == c_; }

std::size_t CanonicalLine::hash() const {
  return hash_pair(hash_pair(a_.hash(), b_.hash()), c_.hash());
}

CanonicalLine canonical_line_through(const Point2& p, const Point2& q) {
  if (p == q) throw std::domain_error("degenerate pair: line through equal points");
  const Scalar a = p.y - q.y;
  const Scalar b = q.x - p.x;
  return CanonicalLine(a, b, a * p.x + b * p.y);
}

CanonicalLine unit_locus_line(const Point2& p, const Point2& q) {
  if (p == q) throw std::domain_error("degenerate pair: unit-area locus of equal points");
  const Scalar a = p.y - q.y;
  const Scalar b = q.x - p.x;
  const Scalar c = Scalar(2) - (p.x * q.y - q.x * p.y);
  return CanonicalLine(a, b, c);
}

Point2 AffineMap::apply(const Point2& p) const {
  return Point2{m00 * p.x + m01 * p.y + t0, m10 * p.x + m11 * p.y + t1};
}

AffineMap AffineMap::inverse() const {
  const Scalar d = det();
  if (d.is_zero()) throw std::domain_error("affine map is singular");
  const Scalar i00 = m11 / d;
  const Scalar i01 = -(m01 / d);
  const Scalar i10 = -(m10 / d);
  const Scalar i11 = m00 / d;
  return AffineMap{i00, i01, i10, i11, -(i00 * t0 + i01 * t1), -(i10 * t0 + i11 * t1)};
}

CanonicalLine AffineMap::apply_line(const CanonicalLine& line) const {
  const AffineMap inv = inverse();
  const Scalar a = line.a() * inv.m00 + line.b() * inv.m10;
  const Scalar b = line.a() * inv.m01 + line.b() * inv.m11;
  const Scalar c = line.c() + a * t0 + b * t1;
  return CanonicalLine(a, b, c);
}

void PointSet::add(Point2 p) {
  if (num_parts > 0) throw DataError("point without a part label in a partitioned set");
  for (const Point2& q : points) {
    if (q == p) throw DataError("duplicate point rejected: (" + p.x.str() + ", " + p.y.str() + ")");
  }
  points.push_back(std::move(p));
}

void PointSet::add(Point2 p, int part) {
  if (num_parts <= 0) throw DataError("part label given for an unpartitioned set");
  if (part < 0 || part >= num_parts) throw DataError("part label out of range");
  for (const Point2& q : points) {
    if (q == p) throw DataError("duplicate point rejected: (" + p.x.str() + ", " + p.y.str() + ")");
  }
  points.push_back(std::move(p));
  parts.push_back(part);
}

}  // namespace uat
