#include "uat/geom2d.hpp"

#include <random>

#include "doctest.h"

using uat::AffineMap;
using uat::CanonicalLine;
using uat::DataError;
using uat::Point2;
using uat::PointSet;
using uat::Rational;
using uat::Scalar;

namespace {

Point2 pt(long x, long y) { return Point2{Scalar(x), Scalar(y)}; }

long rand_in(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Point2 rand_pt(std::mt19937_64& rng) { return pt(rand_in(rng, -50, 50), rand_in(rng, -50, 50)); }

// Random unimodular map: a product of integer shears plus a translation.
AffineMap rand_unimodular(std::mt19937_64& rng) {
  const Scalar u(rand_in(rng, -3, 3));
  const Scalar v(rand_in(rng, -3, 3));
  // [[1,u],[0,1]] * [[1,0],[v,1]] = [[1+u*v, u], [v, 1]]
  return AffineMap{Scalar(1) + u * v, u, v, Scalar(1),
                   Scalar(rand_in(rng, -20, 20)), Scalar(rand_in(rng, -20, 20))};
}

// A concrete point on the line with parameter t.
Point2 point_on(const CanonicalLine& line, const Scalar& t) {
  if (line.a().is_zero()) return Point2{t, line.c() / line.b()};
  return Point2{(line.c() - line.b() * t) / line.a(), t};
}

}  // namespace

TEST_SUITE("geom2d") {

TEST_CASE("signed double area basics") {
  CHECK(signed_double_area(pt(0, 0), pt(1, 0), pt(0, 2)) == Scalar(2));
  CHECK(signed_double_area(pt(0, 0), pt(0, 2), pt(1, 0)) == Scalar(-2));
  CHECK(signed_double_area(pt(0, 0), pt(1, 1), pt(2, 2)).is_zero());
}

TEST_CASE("signed double area is alternating") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    const Point2 p = rand_pt(rng), q = rand_pt(rng), r = rand_pt(rng);
    const Scalar v = signed_double_area(p, q, r);
    CHECK(signed_double_area(q, p, r) == -v);
    CHECK(signed_double_area(p, r, q) == -v);
    CHECK(signed_double_area(r, q, p) == -v);
    CHECK(signed_double_area(q, r, p) == v);
    CHECK(signed_double_area(r, p, q) == v);
  }
}

TEST_CASE("signed double area is unimodular-invariant") {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 50; ++iter) {
    const Point2 p = rand_pt(rng), q = rand_pt(rng), r = rand_pt(rng);
    const AffineMap m = rand_unimodular(rng);
    CHECK(m.det() == Scalar(1));
    CHECK(signed_double_area(m.apply(p), m.apply(q), m.apply(r)) == signed_double_area(p, q, r));
  }
}

TEST_CASE("unit-area locus line") {
  const CanonicalLine horizontal = unit_locus_line(pt(0, 0), pt(1, 0));
  CHECK(horizontal == CanonicalLine(Scalar(0), Scalar(1), Scalar(2)));
  const CanonicalLine vertical = unit_locus_line(pt(0, 0), pt(0, 1));
  CHECK(vertical.a() == Scalar(1));
  CHECK(vertical.b() == Scalar(0));
  CHECK(vertical.c() == Scalar(-2));
  CHECK_THROWS_AS(unit_locus_line(pt(1, 1), pt(1, 1)), std::domain_error);
}

TEST_CASE("points on the locus have signed double area exactly 2") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    const Point2 p = rand_pt(rng);
    Point2 q = rand_pt(rng);
    while (q == p) q = rand_pt(rng);
    const CanonicalLine locus = unit_locus_line(p, q);
    const Scalar t(Rational(uat::BigInt(rand_in(rng, -99, 99)), uat::BigInt(rand_in(rng, 1, 9))));
    const Point2 r = point_on(locus, t);
    CHECK(locus.contains(r));
    CHECK(signed_double_area(p, q, r) == Scalar(2));
  }
}

TEST_CASE("canonical line through two points") {
  const CanonicalLine l = canonical_line_through(pt(0, 0), pt(2, 4));
  CHECK(l.a() == Scalar(1));
  CHECK(l.b() == Scalar(Rational(uat::BigInt(-1), uat::BigInt(2))));
  CHECK(l.c() == Scalar(0));
  CHECK(canonical_line_through(pt(0, 2), pt(5, 2)) == canonical_line_through(pt(1, 2), pt(3, 2)));
  CHECK(canonical_line_through(pt(0, 0), pt(2, 4)) == canonical_line_through(pt(2, 4), pt(0, 0)));
  CHECK_THROWS_AS(canonical_line_through(pt(1, 1), pt(1, 1)), std::domain_error);
  CHECK_THROWS_AS(CanonicalLine(Scalar(0), Scalar(0), Scalar(1)), std::domain_error);
}

TEST_CASE("line keys match across spanning pairs") {
  std::mt19937_64 rng(14);
  for (int iter = 0; iter < 50; ++iter) {
    const Point2 p = rand_pt(rng);
    Point2 q = rand_pt(rng);
    while (q == p) q = rand_pt(rng);
    const CanonicalLine l = canonical_line_through(p, q);
    // Third point on the same line via the midpoint trick doubled out.
    const Point2 r{p.x + (q.x - p.x) * Scalar(3), p.y + (q.y - p.y) * Scalar(3)};
    CHECK(canonical_line_through(p, r) == l);
    CHECK(canonical_line_through(p, r).hash() == l.hash());
  }
}

TEST_CASE("affine maps invert and transport lines") {
  std::mt19937_64 rng(15);
  for (int iter = 0; iter < 50; ++iter) {
    const AffineMap m = rand_unimodular(rng);
    const AffineMap mi = m.inverse();
    const Point2 p = rand_pt(rng);
    CHECK(mi.apply(m.apply(p)) == p);

    Point2 q = rand_pt(rng);
    while (q == p) q = rand_pt(rng);
    const CanonicalLine l = canonical_line_through(p, q);
    const CanonicalLine img = m.apply_line(l);
    CHECK(img.contains(m.apply(p)));
    CHECK(img.contains(m.apply(q)));
    CHECK(img == canonical_line_through(m.apply(p), m.apply(q)));
  }
  const AffineMap singular{Scalar(1), Scalar(2), Scalar(2), Scalar(4), Scalar(0), Scalar(0)};
  CHECK_THROWS_AS(singular.inverse(), std::domain_error);
}

TEST_CASE("point sets reject duplicates and bad labels") {
  PointSet s;
  s.add(pt(0, 0));
  s.add(pt(1, 0));
  CHECK_THROWS_AS(s.add(pt(0, 0)), DataError);
  CHECK_THROWS_AS(s.add(pt(1, 1), 0), DataError);

  PointSet t;
  t.num_parts = 3;
  t.add(pt(0, 0), 0);
  t.add(pt(1, 0), 2);
  CHECK_THROWS_AS(t.add(pt(2, 0), 3), DataError);
  CHECK_THROWS_AS(t.add(pt(2, 0), -1), DataError);
  CHECK_THROWS_AS(t.add(pt(2, 0)), DataError);
  CHECK(t.size() == 2);
}

}  // TEST_SUITE
