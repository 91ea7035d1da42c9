#include "uat/counting.hpp"

#include <omp.h>

#include <numeric>
#include <random>

#include "doctest.h"

using uat::AffineMap;
using uat::BigInt;
using uat::Point2;
using uat::PointSet;
using uat::Rational;
using uat::Scalar;
using uat::TriangleCount;

namespace {

Point2 pt(long x, long y) { return Point2{Scalar(x), Scalar(y)}; }

long rand_in(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

PointSet rectangle_set() {
  PointSet s;
  s.add(pt(0, 0));
  s.add(pt(1, 0));
  s.add(pt(0, 2));
  s.add(pt(1, 2));
  return s;
}

PointSet grid(int w, int h) {
  PointSet s;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) s.add(pt(x, y));
  }
  return s;
}

// Random 25-point subset of a 6x6 grid with a random 3-part labelling;
// lattice sets are dense in unit-area triangles.
PointSet lattice_subset(std::mt19937_64& rng) {
  std::vector<int> idx(36);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng() % i]);
  PointSet s;
  s.num_parts = 3;
  for (int t = 0; t < 25; ++t) {
    s.add(pt(idx[t] % 6, idx[t] / 6), static_cast<int>(rng() % 3));
  }
  return s;
}

// Wide random rational coordinates: the probability of any triple having
// area exactly 1 is negligible.
PointSet scattered_set(std::mt19937_64& rng, int n) {
  PointSet s;
  while (static_cast<int>(s.size()) < n) {
    const Scalar x(Rational(BigInt(rand_in(rng, -1000000, 1000000)), BigInt(rand_in(rng, 1, 997))));
    const Scalar y(Rational(BigInt(rand_in(rng, -1000000, 1000000)), BigInt(rand_in(rng, 1, 997))));
    try {
      s.add(Point2{x, y});
    } catch (const uat::DataError&) {
    }
  }
  return s;
}

void check_equal_counts(const TriangleCount& a, const TriangleCount& b) {
  CHECK(a.total == b.total);
  CHECK(a.restricted.has_value() == b.restricted.has_value());
  if (a.restricted && b.restricted) CHECK(*a.restricted == *b.restricted);
}

}  // namespace

TEST_SUITE("counting") {

TEST_CASE("brute force on tiny sets") {
  CHECK(uat::count_brute_force(rectangle_set()).total == 4);

  PointSet collinear;
  for (int i = 1; i <= 10; ++i) collinear.add(pt(i, 0));
  CHECK(uat::count_brute_force(collinear).total == 0);

  PointSet tiny;
  tiny.add(pt(0, 0));
  tiny.add(pt(1, 0));
  CHECK(uat::count_brute_force(tiny).total == 0);
  CHECK(uat::count_line_bucket(tiny).total == 0);
  CHECK_FALSE(uat::count_brute_force(rectangle_set()).restricted.has_value());
}

TEST_CASE("line bucket equals the oracle on small examples") {
  CHECK(uat::count_line_bucket(rectangle_set()).total == 4);
  check_equal_counts(uat::count_line_bucket(grid(3, 3)), uat::count_brute_force(grid(3, 3)));
  check_equal_counts(uat::count_line_bucket(grid(4, 4)), uat::count_brute_force(grid(4, 4)));
}

TEST_CASE("oracle equivalence on seeded lattice subsets") {
  std::mt19937_64 rng(20260817);
  for (int iter = 0; iter < 10; ++iter) {
    const PointSet s = lattice_subset(rng);
    const TriangleCount brute = uat::count_brute_force(s);
    const TriangleCount bucket = uat::count_line_bucket(s);
    check_equal_counts(brute, bucket);
    CHECK(brute.total > 0);  // lattice subsets of this density always span some
    REQUIRE(brute.restricted.has_value());
    CHECK(*brute.restricted <= brute.total);
  }
}

TEST_CASE("scattered rational sets span no unit-area triangles") {
  std::mt19937_64 rng(424242);
  for (int iter = 0; iter < 20; ++iter) {
    const PointSet s = scattered_set(rng, 25);
    const TriangleCount brute = uat::count_brute_force(s);
    CHECK(brute.total == 0);
    check_equal_counts(brute, uat::count_line_bucket(s));
  }
}

TEST_CASE("counts are unimodular-invariant") {
  std::mt19937_64 rng(7);
  const PointSet s = lattice_subset(rng);
  const TriangleCount base = uat::count_brute_force(s);
  const AffineMap m{Scalar(3), Scalar(2), Scalar(4), Scalar(3), Scalar(-5), Scalar(11)};
  REQUIRE(m.det() == Scalar(1));
  PointSet mapped;
  mapped.num_parts = s.num_parts;
  for (std::size_t i = 0; i < s.size(); ++i) mapped.add(m.apply(s.points[i]), s.parts[i]);
  check_equal_counts(base, uat::count_brute_force(mapped));
  check_equal_counts(base, uat::count_line_bucket(mapped));
}

TEST_CASE("serial references match the parallel kernels across thread counts") {
  std::mt19937_64 rng(99);
  const PointSet s = lattice_subset(rng);
  const TriangleCount brute_ref = uat::count_brute_force_serial(s);
  const TriangleCount bucket_ref = uat::count_line_bucket_serial(s);
  check_equal_counts(brute_ref, bucket_ref);
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    check_equal_counts(brute_ref, uat::count_brute_force(s));
    check_equal_counts(bucket_ref, uat::count_line_bucket(s));
  }
  omp_set_num_threads(saved);
}

TEST_CASE("incidence statistics") {
  const uat::IncidenceStats g3 = uat::incidence_stats(grid(3, 3));
  CHECK(g3.lines.size() == 20);
  CHECK(g3.lines_with_at_least.at(3) == 8);
  CHECK(g3.lines_with_at_least.at(2) == 20);

  PointSet general;
  general.add(pt(0, 0));
  general.add(pt(1, 0));
  general.add(pt(0, 1));
  general.add(pt(2, 3));
  general.add(pt(5, 1));
  const uat::IncidenceStats s5 = uat::incidence_stats(general);
  CHECK(s5.lines.size() == 10);
  for (const auto& rec : s5.lines) CHECK(rec.points_on.size() == 2);

  PointSet one;
  one.add(pt(0, 0));
  CHECK_THROWS_AS(uat::incidence_stats(one), uat::DataError);
}

TEST_CASE("membership lists are complete and ordered") {
  const auto recs = uat::spanned_lines(grid(3, 3));
  for (const auto& rec : recs) {
    CHECK(std::is_sorted(rec.points_on.begin(), rec.points_on.end()));
    CHECK(rec.points_on.size() >= 2);
  }
}

}  // TEST_SUITE
