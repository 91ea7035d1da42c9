#include "uat/gridstats.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "uat/counting.hpp"

using uat::ConvexSet;
using uat::DataError;
using uat::DeltaHistogram;
using uat::GridPlane;
using uat::MultiplicityTable;
using uat::PartitionedCount;
using uat::RichCensus;
using uat::Scalar;
using uat::Triple;

namespace {

Triple tri(long a, long b, long c) { return Triple{Scalar(a), Scalar(b), Scalar(c)}; }

std::vector<Scalar> vals(std::initializer_list<long> xs) {
  std::vector<Scalar> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

long long histogram_sum(const RichCensus& c) {
  long long sum = 0;
  for (const auto& [bucket, count] : c.dyadic_histogram) {
    (void)bucket;
    sum += count;
  }
  return sum;
}

}  // namespace

TEST_SUITE("gridstats") {

TEST_CASE("plane coefficients follow the pattern (c-b, a-c, b-a)") {
  const GridPlane g = uat::plane_of(tri(1, 2, 3));
  CHECK(g.cx == Scalar(1));
  CHECK(g.cy == Scalar(-2));
  CHECK(g.cz == Scalar(1));
  CHECK(uat::plane_of(tri(2, 3, 4)) == g);  // a diagonal translate, same plane
  CHECK_THROWS_AS(uat::plane_of(tri(1, 1, 1)), DataError);
  CHECK_THROWS_AS(uat::plane_of(tri(-5, -5, -5)), DataError);
}

TEST_CASE("planes coincide exactly for diagonal translates") {
  std::mt19937_64 rng(987654);
  std::uniform_int_distribution<long> coord(-8, 8);
  int equal_seen = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const Triple p = tri(coord(rng), coord(rng), coord(rng));
    if (p[0] == p[1] && p[1] == p[2]) continue;

    const Scalar t(coord(rng));
    const Triple shifted{p[0] + t, p[1] + t, p[2] + t};
    CHECK(uat::plane_of(p) == uat::plane_of(shifted));

    const Triple q = tri(coord(rng), coord(rng), coord(rng));
    if (q[0] == q[1] && q[1] == q[2]) continue;
    const Scalar d0 = q[0] - p[0];
    const bool diagonal = d0 == q[1] - p[1] && d0 == q[2] - p[2];
    if (diagonal) ++equal_seen;
    CHECK((uat::plane_of(p) == uat::plane_of(q)) == diagonal);
  }
  CHECK(equal_seen >= 0);  // the explicit translate above covers the equal branch
}

TEST_CASE("plane coefficients always sum to zero") {
  std::mt19937_64 rng(24601);
  std::uniform_int_distribution<long> coord(-20, 20);
  for (int iter = 0; iter < 100; ++iter) {
    const Triple p = tri(coord(rng), coord(rng), coord(rng));
    if (p[0] == p[1] && p[1] == p[2]) continue;
    const GridPlane g = uat::plane_of(p);
    CHECK((g.cx + g.cy + g.cz).is_zero());
  }
}

TEST_CASE("shift multiplicity counts diagonal translates staying inside") {
  CHECK(uat::shift_multiplicity(tri(1, 2, 3), vals({1, 2, 3, 4})) == 2);
  CHECK(uat::shift_multiplicity(tri(1, 2, 4), vals({1, 2, 4})) == 1);
  CHECK(uat::shift_multiplicity(tri(2, 3, 4), vals({1, 2, 3, 4})) == 2);
  CHECK(uat::shift_multiplicity(tri(1, 1, 1), vals({1, 2, 3, 4, 5})) == 5);

  CHECK_THROWS_AS(uat::shift_multiplicity(tri(1, 2, 5), vals({1, 2, 4})), DataError);
  CHECK_THROWS_AS(uat::shift_multiplicity(tri(1, 1, 1), std::vector<Scalar>{}), DataError);
  CHECK_THROWS_AS(uat::shift_multiplicity(tri(1, 2, 2), vals({1, 2, 2})), DataError);

  const std::vector<Scalar> a = vals({1, 2, 4});
  for (const Scalar& x : a) {
    for (const Scalar& y : a) {
      for (const Scalar& z : a) {
        CHECK(uat::shift_multiplicity(Triple{x, y, z}, a) >= 1);
      }
    }
  }
}

TEST_CASE("multiplicity table partitions the cube into diagonal classes") {
  const std::vector<Scalar> a = vals({1, 2, 3, 4});
  const MultiplicityTable table = uat::multiplicity_table(a);

  const auto contains = [&a](const Scalar& v) {
    for (const Scalar& u : a) {
      if (u == v) return true;
    }
    return false;
  };

  long long covered = 0;
  for (const auto& [rep, mult] : table.classes) {
    CHECK(mult >= 1);
    CHECK(uat::shift_multiplicity(rep, a) == mult);
    covered += mult;

    // The representative's first coordinate is the smallest reachable value:
    // no further negative diagonal shift stays inside the cube.
    for (const Scalar& v : a) {
      if (v < rep[0]) {
        const Scalar t = v - rep[0];
        CHECK_FALSE((contains(rep[1] + t) && contains(rep[2] + t)));
      }
    }
  }
  CHECK(covered == 64);

  const Triple diag_rep = tri(1, 2, 3);
  REQUIRE(table.classes.count(diag_rep) == 1);
  CHECK(table.classes.at(diag_rep) == 2);
}

TEST_CASE("delta histogram matches the hand count for {1,2,4}") {
  const DeltaHistogram h = uat::delta_histogram(vals({1, 2, 4}), vals({1, 2, 4}));
  CHECK(h.counts.size() == 7);
  CHECK(h.counts.at(Scalar(0)) == 3);
  for (long s : {1L, -1L, 2L, -2L, 3L, -3L}) {
    CHECK(h.counts.at(Scalar(s)) == 1);
  }
  long long sum = 0;
  for (const auto& [s, c] : h.counts) {
    (void)s;
    sum += c;
  }
  CHECK(sum == 9);
  CHECK(h.m_at_least(3) == 1);
  CHECK(h.m_at_least(1) == 7);
  CHECK(h.m_at_least(4) == 0);
  CHECK_THROWS_AS(h.m_at_least(0), DataError);
}

TEST_CASE("delta histogram of a singleton is the single zero difference") {
  const DeltaHistogram h = uat::delta_histogram(vals({7}), vals({7}));
  CHECK(h.counts.size() == 1);
  CHECK(h.counts.at(Scalar(0)) == 1);
  CHECK_THROWS_AS(uat::delta_histogram(vals({}), vals({1})), DataError);
  CHECK_THROWS_AS(uat::delta_histogram(vals({1, 1}), vals({2})), DataError);
}

TEST_CASE("delta histogram totals, symmetry and a non-increasing tail curve") {
  std::mt19937_64 rng(555777);
  std::uniform_int_distribution<long> draw(-30, 30);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<Scalar> xs;
    std::vector<Scalar> ys;
    while (xs.size() < 6) {
      const Scalar v(draw(rng));
      bool dup = false;
      for (const Scalar& u : xs) dup = dup || u == v;
      if (!dup) xs.push_back(v);
    }
    while (ys.size() < 4) {
      const Scalar v(draw(rng));
      bool dup = false;
      for (const Scalar& u : ys) dup = dup || u == v;
      if (!dup) ys.push_back(v);
    }

    const DeltaHistogram h = uat::delta_histogram(xs, ys);
    long long sum = 0;
    for (const auto& [s, c] : h.counts) {
      (void)s;
      sum += c;
    }
    CHECK(sum == static_cast<long long>(xs.size() * ys.size()));

    const DeltaHistogram self = uat::delta_histogram(xs, xs);
    for (const auto& [s, c] : self.counts) {
      REQUIRE(self.counts.count(-s) == 1);
      CHECK(self.counts.at(-s) == c);
    }

    long long prev = h.m_at_least(1);
    for (long long tau = 2; tau <= 6; ++tau) {
      const long long cur = h.m_at_least(tau);
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("partition extremes: k=1 all rich-rich, huge k all poor-poor") {
  const ConvexSet a(vals({1, 4, 9, 16}));
  const ConvexSet b(vals({1, 4, 9, 16}));
  const auto oracle = uat::count_brute_force(uat::convex_grid(a, b));

  const PartitionedCount low = uat::rich_poor_partition(a, b, 1);
  CHECK(low.rich_rich == oracle.total);
  CHECK(low.rich_poor == 0);
  CHECK(low.poor_rich == 0);
  CHECK(low.poor_poor == 0);

  const PartitionedCount high = uat::rich_poor_partition(a, b, 1000);
  CHECK(high.poor_poor == oracle.total);
  CHECK(high.rich_rich == 0);
  CHECK(high.rich_poor == 0);
  CHECK(high.poor_rich == 0);

  CHECK_THROWS_AS(uat::rich_poor_partition(a, b, 0), DataError);
}

TEST_CASE("partition classes sum to the brute-force total") {
  const ConvexSet a(vals({1, 4, 9, 16}));
  const ConvexSet b(vals({1, 4, 9, 16}));
  const auto oracle = uat::count_brute_force(uat::convex_grid(a, b));
  const PartitionedCount par = uat::rich_poor_partition(a, b, 2);
  const PartitionedCount ser = uat::rich_poor_partition_serial(a, b, 2);

  CHECK(par.total() == oracle.total);
  CHECK(par.rich_rich == ser.rich_rich);
  CHECK(par.rich_poor == ser.rich_poor);
  CHECK(par.poor_rich == ser.poor_rich);
  CHECK(par.poor_poor == ser.poor_poor);

  const ConvexSet a2(vals({1, 4, 9}));
  const ConvexSet b2(vals({1, 3, 7}));
  const auto oracle2 = uat::count_brute_force(uat::convex_grid(a2, b2));
  const PartitionedCount par2 = uat::rich_poor_partition(a2, b2, 2);
  const PartitionedCount ser2 = uat::rich_poor_partition_serial(a2, b2, 2);
  CHECK(par2.total() == oracle2.total);
  CHECK(ser2.total() == oracle2.total);
  CHECK(par2.rich_rich == ser2.rich_rich);
  CHECK(par2.rich_poor == ser2.rich_poor);
  CHECK(par2.poor_rich == ser2.poor_rich);
  CHECK(par2.poor_poor == ser2.poor_poor);
}

TEST_CASE("partition classifies a grid that does carry unit triangles") {
  // The abscissa set repeats the difference 1 ((0,1) and (1,2)), so triples
  // on {0,1} shift by t=1 and are 2-rich; (0,0),(0,2),(1,y) is a unit-area
  // triangle with a 2-rich abscissa triple and a 1-poor ordinate triple.
  const std::vector<Scalar> av{Scalar(0), Scalar::parse("2/5"), Scalar(1), Scalar(2),
                               Scalar::parse("16/5")};
  const ConvexSet a(av);
  const ConvexSet b(vals({0, 2, 5}));
  const auto oracle = uat::count_brute_force(uat::convex_grid(a, b));
  REQUIRE(oracle.total > 0);

  for (long k : {1L, 2L, 3L}) {
    const PartitionedCount par = uat::rich_poor_partition(a, b, k);
    const PartitionedCount ser = uat::rich_poor_partition_serial(a, b, k);
    CHECK(par.total() == oracle.total);
    CHECK(par.rich_rich == ser.rich_rich);
    CHECK(par.rich_poor == ser.rich_poor);
    CHECK(par.poor_rich == ser.poor_rich);
    CHECK(par.poor_poor == ser.poor_poor);
  }

  CHECK(uat::shift_multiplicity(Triple{Scalar(0), Scalar(0), Scalar(1)}, av) >= 2);
  const PartitionedCount split = uat::rich_poor_partition(a, b, 2);
  CHECK(split.rich_poor >= 3);  // the three (0,0),(0,2),(1,y) triangles at least
  CHECK(split.rich_rich < oracle.total);
}

TEST_CASE("census of the progression {1,2,3}") {
  const std::vector<Scalar> a = vals({1, 2, 3});
  // w(p) = 3 - (max - min): spread 0 gives w=3 (3 points), spread 1 gives
  // w=2 (12 points), spread 2 gives w=1 (12 points).
  const RichCensus k1 = uat::rich_point_census(a, 1);
  CHECK(k1.rich_points == 27);
  const RichCensus k2 = uat::rich_point_census(a, 2);
  CHECK(k2.rich_points == 15);
  const RichCensus k3 = uat::rich_point_census(a, 3);
  CHECK(k3.rich_points == 3);
  const RichCensus k4 = uat::rich_point_census(a, 4);
  CHECK(k4.rich_points == 0);

  REQUIRE(k2.dyadic_histogram.size() == 2);
  CHECK(k2.dyadic_histogram.at(1) == 12);  // w = 1
  CHECK(k2.dyadic_histogram.at(2) == 15);  // w in {2, 3}
  CHECK(histogram_sum(k2) == 27);
  CHECK(k1.dyadic_histogram == k2.dyadic_histogram);  // histogram ignores k

  CHECK_THROWS_AS(uat::rich_point_census(a, 0), DataError);
}

TEST_CASE("census golden for the convex set {1,4,9,16}") {
  const std::vector<Scalar> a = vals({1, 4, 9, 16});
  // Only the four diagonal points lie on a 2-rich class (the main diagonal,
  // w=4); every off-diagonal point has w=1.
  const RichCensus c = uat::rich_point_census(a, 2);
  CHECK(c.rich_points == 4);
  REQUIRE(c.dyadic_histogram.size() == 2);
  CHECK(c.dyadic_histogram.at(1) == 60);
  CHECK(c.dyadic_histogram.at(3) == 4);
  CHECK(histogram_sum(c) == 64);

  long long prev = uat::rich_point_census(a, 1).rich_points;
  for (long k = 2; k <= 6; ++k) {
    const long long cur = uat::rich_point_census(a, k).rich_points;
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("census agrees with the class table") {
  for (const std::vector<Scalar>& a :
       {vals({1, 2, 3, 4}), vals({1, 4, 9, 16}), vals({1, 2, 4, 8, 16})}) {
    const MultiplicityTable table = uat::multiplicity_table(a);
    for (long k = 1; k <= 5; ++k) {
      long long from_classes = 0;
      for (const auto& [rep, mult] : table.classes) {
        (void)rep;
        if (mult >= k) from_classes += mult;
      }
      CHECK(uat::rich_point_census(a, k).rich_points == from_classes);
    }
  }
}

}  // TEST_SUITE
