#include "uat/counting.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <exception>
#include <unordered_map>

namespace uat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Bucket {
  int count = 0;
  std::array<int, 3> per_part{0, 0, 0};
};

using LineMap = std::unordered_map<CanonicalLine, Bucket, CanonicalLineHash>;

LineMap build_line_map(const PointSet& s, const std::vector<LineRecord>& recs) {
  LineMap m;
  m.reserve(recs.size() * 2);
  const bool tri = s.num_parts == 3;
  for (const LineRecord& rec : recs) {
    Bucket b;
    b.count = static_cast<int>(rec.points_on.size());
    if (tri) {
      for (int idx : rec.points_on) ++b.per_part[s.parts[idx]];
    }
    m.emplace(rec.line, b);
  }
  return m;
}

// Adds |locus(i,j) ∩ S| to sum (and the third-part membership to rsum for
// tripartite sets).  Loci spanned by fewer than two points are resolved by
// probing every point for membership.
void tally_pair(const PointSet& s, const LineMap& map, int i, int j, bool tri,
                unsigned long long& sum, unsigned long long& rsum) {
  const CanonicalLine locus = unit_locus_line(s.points[i], s.points[j]);
  const auto it = map.find(locus);
  if (it != map.end()) {
    sum += static_cast<unsigned long long>(it->second.count);
    if (tri && s.parts[i] != s.parts[j]) {
      rsum += static_cast<unsigned long long>(it->second.per_part[3 - s.parts[i] - s.parts[j]]);
    }
    return;
  }
  const int n = static_cast<int>(s.size());
  int found = 0;
  int found_part = -1;
  for (int k = 0; k < n; ++k) {
    if (locus.contains(s.points[k])) {
      ++found;
      if (tri) found_part = s.parts[k];
    }
  }
  if (found > 1) throw InternalError("line map is missing a pair-spanned line");
  sum += static_cast<unsigned long long>(found);
  if (tri && found == 1 && s.parts[i] != s.parts[j] && found_part == 3 - s.parts[i] - s.parts[j]) {
    ++rsum;
  }
}

TriangleCount finish_bucket_count(bool tri, unsigned long long sum, unsigned long long rsum,
                                  Clock::time_point t0) {
  if (sum % 3 != 0) throw InternalError("ordered-pair locus sum is not divisible by 3");
  if (tri && rsum % 3 != 0) throw InternalError("restricted locus sum is not divisible by 3");
  TriangleCount out;
  out.total = sum / 3;
  if (tri) out.restricted = rsum / 3;
  out.elapsed_ms = ms_since(t0);
  return out;
}

bool unit_area(const Scalar& double_area) {
  static const Scalar plus2(2);
  static const Scalar minus2(-2);
  return double_area == plus2 || double_area == minus2;
}

}  // namespace

std::vector<LineRecord> spanned_lines(const PointSet& s) {
  const int n = static_cast<int>(s.size());
  struct Build {
    std::vector<int> pts;
    long long hits = 0;
  };
  std::unordered_map<CanonicalLine, Build, CanonicalLineHash> m;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Build& b = m.try_emplace(canonical_line_through(s.points[i], s.points[j])).first->second;
      ++b.hits;
      if (std::find(b.pts.begin(), b.pts.end(), i) == b.pts.end()) b.pts.push_back(i);
      if (std::find(b.pts.begin(), b.pts.end(), j) == b.pts.end()) b.pts.push_back(j);
    }
  }
  std::vector<LineRecord> recs;
  recs.reserve(m.size());
  long long pair_total = 0;
  for (auto& [line, b] : m) {
    const long long mcount = static_cast<long long>(b.pts.size());
    if (b.hits != mcount * (mcount - 1) / 2) {
      throw InternalError("canonical line key integrity: per-line pair count mismatch");
    }
    pair_total += b.hits;
    recs.push_back(LineRecord{line, std::move(b.pts)});
  }
  if (pair_total != static_cast<long long>(n) * (n - 1) / 2) {
    throw InternalError("canonical line key integrity: pair total mismatch");
  }
  std::sort(recs.begin(), recs.end(),
            [](const LineRecord& x, const LineRecord& y) { return x.points_on < y.points_on; });
  return recs;
}

TriangleCount count_brute_force_serial(const PointSet& s) {
  const auto t0 = Clock::now();
  const int n = static_cast<int>(s.size());
  const bool tri = s.num_parts == 3;
  unsigned long long total = 0;
  unsigned long long restr = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (!unit_area(signed_double_area(s.points[i], s.points[j], s.points[k]))) continue;
        ++total;
        if (tri && s.parts[i] != s.parts[j] && s.parts[i] != s.parts[k] && s.parts[j] != s.parts[k]) {
          ++restr;
        }
      }
    }
  }
  TriangleCount out;
  out.total = total;
  if (tri) out.restricted = restr;
  out.elapsed_ms = ms_since(t0);
  return out;
}

TriangleCount count_brute_force(const PointSet& s) {
  const auto t0 = Clock::now();
  const int n = static_cast<int>(s.size());
  const bool tri = s.num_parts == 3;
  unsigned long long total = 0;
  unsigned long long restr = 0;
  std::exception_ptr err = nullptr;
#pragma omp parallel for reduction(+ : total, restr) schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    try {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          if (!unit_area(signed_double_area(s.points[i], s.points[j], s.points[k]))) continue;
          ++total;
          if (tri && s.parts[i] != s.parts[j] && s.parts[i] != s.parts[k] && s.parts[j] != s.parts[k]) {
            ++restr;
          }
        }
      }
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  TriangleCount out;
  out.total = total;
  if (tri) out.restricted = restr;
  out.elapsed_ms = ms_since(t0);
  return out;
}

TriangleCount count_line_bucket_serial(const PointSet& s) {
  const auto t0 = Clock::now();
  const int n = static_cast<int>(s.size());
  const bool tri = s.num_parts == 3;
  const LineMap map = build_line_map(s, spanned_lines(s));
  unsigned long long sum = 0;
  unsigned long long rsum = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) tally_pair(s, map, i, j, tri, sum, rsum);
    }
  }
  return finish_bucket_count(tri, sum, rsum, t0);
}

TriangleCount count_line_bucket(const PointSet& s) {
  const auto t0 = Clock::now();
  const int n = static_cast<int>(s.size());
  const bool tri = s.num_parts == 3;
  const LineMap map = build_line_map(s, spanned_lines(s));
  unsigned long long sum = 0;
  unsigned long long rsum = 0;
  std::exception_ptr err = nullptr;
#pragma omp parallel for reduction(+ : sum, rsum) schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    try {
      for (int j = 0; j < n; ++j) {
        if (i != j) tally_pair(s, map, i, j, tri, sum, rsum);
      }
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return finish_bucket_count(tri, sum, rsum, t0);
}

IncidenceStats incidence_stats(const PointSet& s) {
  if (s.size() < 2) throw DataError("incidence statistics need at least 2 points");
  IncidenceStats st;
  st.lines = spanned_lines(s);
  std::size_t max_count = 0;
  for (const LineRecord& rec : st.lines) max_count = std::max(max_count, rec.points_on.size());
  for (std::size_t j = 2; j <= max_count; ++j) {
    long long c = 0;
    for (const LineRecord& rec : st.lines) {
      if (rec.points_on.size() >= j) ++c;
    }
    st.lines_with_at_least[static_cast<int>(j)] = c;
  }
  return st;
}

}  // namespace uat
