#include "uat/gridstats.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <exception>
#include <unordered_set>

#include "uat/errors.hpp"

namespace uat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

using ValueSet = std::unordered_set<Scalar, ScalarHash>;

ValueSet checked_value_set(const std::vector<Scalar>& values) {
  if (values.empty()) throw DataError("value set is empty");
  ValueSet set;
  set.reserve(values.size() * 2);
  for (const Scalar& v : values) {
    if (!set.insert(v).second) throw DataError("duplicate value in set: " + v.str());
  }
  return set;
}

// Candidate shifts are t = v - p[0]: any diagonal translate keeping p inside
// must land the first coordinate on a member value.
long multiplicity_in(const Triple& p, const std::vector<Scalar>& values, const ValueSet& set) {
  long count = 0;
  for (const Scalar& v : values) {
    const Scalar t = v - p[0];
    if (set.count(p[1] + t) != 0 && set.count(p[2] + t) != 0) ++count;
  }
  return count;
}

bool unit_area(const Scalar& double_area) {
  static const Scalar plus2(2);
  static const Scalar minus2(-2);
  return double_area == plus2 || double_area == minus2;
}

struct GridView {
  PointSet grid;
  ValueSet aset;
  ValueSet bset;
};

GridView make_grid_view(const ConvexSet& a, const ConvexSet& b, long k) {
  if (k < 1) throw DataError("richness threshold must be at least 1");
  return GridView{convex_grid(a, b), checked_value_set(a.values()), checked_value_set(b.values())};
}

// Classifies one unit-area triangle of the grid into the four counters.
void classify_triangle(const GridView& view, const ConvexSet& a, const ConvexSet& b, long k, int i,
                       int j, int l, unsigned long long& rr, unsigned long long& rp,
                       unsigned long long& pr, unsigned long long& pp) {
  const Point2& p = view.grid.points[i];
  const Point2& q = view.grid.points[j];
  const Point2& r = view.grid.points[l];
  const bool a_rich = multiplicity_in(Triple{p.x, q.x, r.x}, a.values(), view.aset) >= k;
  const bool b_rich = multiplicity_in(Triple{p.y, q.y, r.y}, b.values(), view.bset) >= k;
  if (a_rich) {
    ++(b_rich ? rr : rp);
  } else {
    ++(b_rich ? pr : pp);
  }
}

}  // namespace

std::size_t TripleHash::operator()(const Triple& t) const {
  const ScalarHash h;
  std::size_t seed = 0;
  for (const Scalar& v : t) {
    seed ^= h(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

GridPlane plane_of(const Triple& p) {
  GridPlane g{p[2] - p[1], p[0] - p[2], p[1] - p[0]};
  if (g.cx.is_zero() && g.cy.is_zero() && g.cz.is_zero()) {
    throw DataError("plane is undefined for a constant triple: all coordinates equal " + p[0].str());
  }
  return g;
}

long shift_multiplicity(const Triple& p, const std::vector<Scalar>& values) {
  const ValueSet set = checked_value_set(values);
  for (const Scalar& c : p) {
    if (set.count(c) == 0) throw DataError("point coordinate " + c.str() + " is not a member value");
  }
  return multiplicity_in(p, values, set);
}

MultiplicityTable multiplicity_table(const std::vector<Scalar>& values) {
  const ValueSet set = checked_value_set(values);
  std::vector<Scalar> sorted = values;
  std::sort(sorted.begin(), sorted.end(), [](const Scalar& x, const Scalar& y) { return x < y; });
  MultiplicityTable out;
  const std::size_t n = sorted.size();
  out.classes.reserve(n * n * n / 2 + 1);
  for (std::size_t ia = 0; ia < n; ++ia) {
    for (std::size_t ib = 0; ib < n; ++ib) {
      for (std::size_t ic = 0; ic < n; ++ic) {
        const Triple p{sorted[ia], sorted[ib], sorted[ic]};
        long count = 0;
        Triple rep;
        for (const Scalar& v : sorted) {
          const Scalar t = v - p[0];
          if (set.count(p[1] + t) != 0 && set.count(p[2] + t) != 0) {
            if (count == 0) rep = Triple{v, p[1] + t, p[2] + t};
            ++count;
          }
        }
        out.classes.try_emplace(rep, count);
      }
    }
  }
  return out;
}

DeltaHistogram delta_histogram(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  checked_value_set(xs);
  checked_value_set(ys);
  DeltaHistogram out;
  out.counts.reserve(xs.size() * ys.size());
  for (const Scalar& x : xs) {
    for (const Scalar& y : ys) {
      ++out.counts[x - y];
    }
  }
  return out;
}

long long DeltaHistogram::m_at_least(long long tau) const {
  if (tau < 1) throw DataError("representation threshold must be at least 1");
  long long m = 0;
  for (const auto& [s, c] : counts) {
    (void)s;
    if (c >= tau) ++m;
  }
  return m;
}

PartitionedCount rich_poor_partition_serial(const ConvexSet& a, const ConvexSet& b, long k) {
  const auto t0 = Clock::now();
  const GridView view = make_grid_view(a, b, k);
  const int n = static_cast<int>(view.grid.size());
  PartitionedCount out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int l = j + 1; l < n; ++l) {
        if (!unit_area(signed_double_area(view.grid.points[i], view.grid.points[j],
                                          view.grid.points[l]))) {
          continue;
        }
        classify_triangle(view, a, b, k, i, j, l, out.rich_rich, out.rich_poor, out.poor_rich,
                          out.poor_poor);
      }
    }
  }
  out.elapsed_ms = ms_since(t0);
  return out;
}

PartitionedCount rich_poor_partition(const ConvexSet& a, const ConvexSet& b, long k) {
  const auto t0 = Clock::now();
  const GridView view = make_grid_view(a, b, k);
  const int n = static_cast<int>(view.grid.size());
  unsigned long long rr = 0;
  unsigned long long rp = 0;
  unsigned long long pr = 0;
  unsigned long long pp = 0;
  std::exception_ptr err = nullptr;
#pragma omp parallel for reduction(+ : rr, rp, pr, pp) schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    try {
      for (int j = i + 1; j < n; ++j) {
        for (int l = j + 1; l < n; ++l) {
          if (!unit_area(signed_double_area(view.grid.points[i], view.grid.points[j],
                                            view.grid.points[l]))) {
            continue;
          }
          classify_triangle(view, a, b, k, i, j, l, rr, rp, pr, pp);
        }
      }
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  PartitionedCount out;
  out.rich_rich = rr;
  out.rich_poor = rp;
  out.poor_rich = pr;
  out.poor_poor = pp;
  out.elapsed_ms = ms_since(t0);
  return out;
}

RichCensus rich_point_census(const std::vector<Scalar>& values, long k) {
  if (k < 1) throw DataError("richness threshold must be at least 1");
  const ValueSet set = checked_value_set(values);
  const std::size_t n = values.size();
  RichCensus out;
  for (std::size_t ia = 0; ia < n; ++ia) {
    for (std::size_t ib = 0; ib < n; ++ib) {
      for (std::size_t ic = 0; ic < n; ++ic) {
        const long w = multiplicity_in(Triple{values[ia], values[ib], values[ic]}, values, set);
        if (w >= k) ++out.rich_points;
        ++out.dyadic_histogram[std::bit_width(static_cast<unsigned long long>(w))];
      }
    }
  }
  return out;
}

}  // namespace uat
