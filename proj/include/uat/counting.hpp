#pragma once

#include <map>
#include <optional>
#include <vector>

#include "uat/geom2d.hpp"

namespace uat {

struct TriangleCount {
  unsigned long long total = 0;
  // Triples with one vertex in each part; present only for 3-part sets.
  std::optional<unsigned long long> restricted;
  double elapsed_ms = 0.0;
};

struct LineRecord {
  CanonicalLine line;
  std::vector<int> points_on;  // ascending indices of every point on the line
};

struct IncidenceStats {
  std::vector<LineRecord> lines;                // lines spanned by >= 2 points
  std::map<int, long long> lines_with_at_least;  // j -> number of lines with >= j points
};

// Every line spanned by at least two points of the set, with full
// membership lists, ordered by their lowest point indices.
std::vector<LineRecord> spanned_lines(const PointSet& s);

// O(n^3) oracle: tests |signed double area| = 2 over all unordered triples.
TriangleCount count_brute_force(const PointSet& s);
TriangleCount count_brute_force_serial(const PointSet& s);

// Identity method: sums |unit_locus_line(p,q) ∩ S| over ordered pairs and
// divides by 3.  Always equals count_brute_force.
TriangleCount count_line_bucket(const PointSet& s);
TriangleCount count_line_bucket_serial(const PointSet& s);

IncidenceStats incidence_stats(const PointSet& s);

}  // namespace uat
