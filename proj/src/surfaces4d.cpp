#include "uat/surfaces4d.hpp"

#include <omp.h>

#include <exception>
#include <unordered_map>
#include <utility>

#include "uat/constructions.hpp"
#include "uat/counting.hpp"
#include "uat/errors.hpp"

namespace uat {

namespace {

std::string point_str(const Point2& p) { return "(" + p.x.str() + ", " + p.y.str() + ")"; }

// True when every point of the quadruple lies on one line.
bool all_collinear(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const std::array<const Point2*, 4> pts = {&a, &b, &c, &d};
  const Point2* second = nullptr;
  for (int i = 1; i < 4; ++i) {
    if (!(*pts[i] == a)) {
      second = pts[i];
      break;
    }
  }
  if (second == nullptr) return true;  // all four coincide
  const CanonicalLine l = canonical_line_through(a, *second);
  for (int i = 1; i < 4; ++i) {
    if (!l.contains(*pts[i])) return false;
  }
  return true;
}

Scalar chart_denominator(const Point2& p, const Point2& q, const Point2& xy) {
  return (p.y - q.y) * (xy.x - p.x) + (q.x - p.x) * (xy.y - p.y) + Scalar(2);
}

}  // namespace

Scalar Mat3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<Scalar, 3> Mat3::apply(const std::array<Scalar, 3>& v) const {
  std::array<Scalar, 3> out = {Scalar(0), Scalar(0), Scalar(0)};
  for (int i = 0; i < 3; ++i) {
    out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  }
  return out;
}

Mat3 Mat3::mul(const Mat3& other) const {
  Mat3 out{{{{Scalar(0), Scalar(0), Scalar(0)},
             {Scalar(0), Scalar(0), Scalar(0)},
             {Scalar(0), Scalar(0), Scalar(0)}}}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Scalar acc(0);
      for (int k = 0; k < 3; ++k) acc = acc + m[i][k] * other.m[k][j];
      out.m[i][j] = acc;
    }
  }
  return out;
}

bool Mat3::proportional_to(const Mat3& other) const {
  // All 2x2 minors of the 2x9 flattening must vanish.
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) {
      const Scalar& a = m[i / 3][i % 3];
      const Scalar& b = m[j / 3][j % 3];
      const Scalar& c = other.m[i / 3][i % 3];
      const Scalar& d = other.m[j / 3][j % 3];
      if (!(a * d - b * c).is_zero()) return false;
    }
  }
  // Proportionality additionally requires a nonzero factor; equal zero
  // matrices never occur here (every chart matrix has nonzero entries).
  return true;
}

Mat3 projective_matrix(const Point2& p, const Point2& q) {
  const Scalar &a = p.x, &b = p.y, &c = q.x, &d = q.y;
  const Scalar e = a * d - b * c;
  const Scalar two(2);
  return Mat3{{{{e + two, b - d, c - a},
                {c * e + two * (c - a), c * (b - d) + two, c * (c - a)},
                {d * e + two * (d - b), d * (b - d), d * (c - a) + two}}}};
}

SigmaSurface::SigmaSurface(Point2 p_, Point2 q_)
    : p(std::move(p_)), q(std::move(q_)), matrix(projective_matrix(p, q)) {
  if (p.x == q.x || p.y == q.y) {
    throw DataError("surface needs defining points with distinct x- and y-coordinates: " +
                    point_str(p) + ", " + point_str(q));
  }
  if (matrix.det().is_zero()) {
    throw InternalError("singular chart matrix for defining pair " + point_str(p) + ", " +
                        point_str(q));
  }
}

std::optional<Point2> sigma_map(const SigmaSurface& s, const Point2& xy) {
  const Scalar den = chart_denominator(s.p, s.q, xy);
  if (den.is_zero()) return std::nullopt;
  const Scalar two(2);
  return Point2{two * (xy.x - s.p.x) / den + s.q.x, two * (xy.y - s.p.y) / den + s.q.y};
}

bool sigma_member(const Point2& p, const Point2& u, const Point2& q, const Point2& v) {
  if (p == u || q == v) {
    throw DataError("surface membership needs distinct points within each pair");
  }
  if (u.x == p.x || v.x == q.x) {
    // Chart coordinates degenerate; compare the locus lines themselves.
    return unit_locus_line(p, u) == unit_locus_line(q, v);
  }
  const Scalar lhs_slope = (u.y - p.y) / (u.x - p.x);
  const Scalar rhs_slope = (v.y - q.y) / (v.x - q.x);
  if (lhs_slope != rhs_slope) return false;
  const Scalar two(2);
  const Scalar lhs_icpt = (p.y * u.x - p.x * u.y + two) / (u.x - p.x);
  const Scalar rhs_icpt = (q.y * v.x - q.x * v.y + two) / (v.x - q.x);
  return lhs_icpt == rhs_icpt;
}

SlantedReport slanted_audit(const SigmaSurface& s, const std::vector<Point2>& probes) {
  SlantedReport report;
  const SigmaSurface back(s.q, s.p);  // inverse chart, by symmetry of the system
  for (const Point2& probe : probes) {
    ++report.probes;
    const auto forward = sigma_map(s, probe);
    if (!forward.has_value()) {
      ++report.no_image;  // excluded line: empty fiber, still finite
    } else {
      bool ok = true;
      // The homogeneous matrix must agree with the rational chart.
      const auto h = s.matrix.apply({Scalar(1), probe.x, probe.y});
      if (h[0].is_zero() || Point2{h[1] / h[0], h[2] / h[0]} != *forward) ok = false;
      // The unique-partner property, exercised constructively: mapping the
      // image back must return the probe.
      const auto round = sigma_map(back, *forward);
      if (!round.has_value() || *round != probe) ok = false;
      if (!ok) {
        ++report.failures;
        report.witnesses.push_back(point_str(probe));
      }
    }
    // Probe read as (z,w): at most one (x,y) partner via the inverse chart.
    const auto backward = sigma_map(back, probe);
    if (!backward.has_value()) {
      ++report.no_image;
    } else {
      const auto round = sigma_map(s, *backward);
      if (!round.has_value() || *round != probe) {
        ++report.failures;
        report.witnesses.push_back(point_str(probe));
      }
    }
  }
  return report;
}

PairIntersection pair_intersection_audit(const SigmaSurface& s1, const SigmaSurface& s2,
                                         const PointSet& domain) {
  if (s1.p == s2.p && s1.q == s2.q) {
    throw DataError("pair intersection audit needs distinct defining pairs");
  }
  PairIntersection out;
  const std::size_t n = domain.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Point2& u = domain.points[i];
      const Point2& v = domain.points[j];
      if (u == s1.p || v == s1.q || u == s2.p || v == s2.q) continue;
      if (!sigma_member(s1.p, u, s1.q, v)) continue;
      if (!sigma_member(s2.p, u, s2.q, v)) continue;
      if (all_collinear(s1.p, s1.q, u, v)) continue;
      if (all_collinear(s2.p, s2.q, u, v)) continue;
      ++out.count;
      out.witnesses.emplace_back(u, v);
    }
  }
  return out;
}

QuadrupleSet enumerate_Q(const PointSet& s, long threshold, long line_cap) {
  if (threshold < 1 || line_cap < 1) {
    throw DataError("quadruple enumeration needs positive threshold and line cap");
  }
  QuadrupleSet out;
  out.threshold = threshold;
  out.line_cap = line_cap;
  const long n = static_cast<long>(s.size());
  if (n < 2) return out;

  std::unordered_map<CanonicalLine, long, CanonicalLineHash> span_count;
  for (const LineRecord& rec : spanned_lines(s)) {
    span_count.emplace(rec.line, static_cast<long>(rec.points_on.size()));
  }

  std::unordered_map<CanonicalLine, std::vector<std::pair<int, int>>, CanonicalLineHash> groups;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      groups[unit_locus_line(s.points[i], s.points[j])].emplace_back(i, j);
    }
  }

  for (const auto& [locus, pairs] : groups) {
    long on = 0;
    for (const Point2& pt : s.points) {
      if (locus.contains(pt)) ++on;
    }
    if (on < threshold || on * threshold > n) continue;  // outside the medium-rich band
    std::vector<std::pair<int, int>> kept;
    for (const auto& [i, j] : pairs) {
      const CanonicalLine span = canonical_line_through(s.points[i], s.points[j]);
      if (span_count.at(span) <= line_cap) kept.emplace_back(i, j);
    }
    for (const auto& [i, j] : kept) {
      for (const auto& [k, l] : kept) {
        out.quadruples.push_back(
            Quadruple{s.points[i], s.points[j], s.points[k], s.points[l]});
      }
    }
  }
  return out;
}

bool collinear_quadruple_check(const Point2& p, const Point2& u, const Point2& q,
                               const Point2& v) {
  if (p == u || q == v) {
    throw DataError("collinear quadruple check needs distinct points within each pair");
  }
  if (!all_collinear(p, u, q, v)) {
    throw DataError("collinear quadruple check: points are not collinear");
  }
  if (unit_locus_line(p, u) != unit_locus_line(q, v)) {
    throw DataError("collinear quadruple check: locus lines differ");
  }
  const Scalar dx1 = u.x - p.x, dy1 = u.y - p.y;
  const Scalar dx2 = v.x - q.x, dy2 = v.y - q.y;
  return dx1 * dx1 + dy1 * dy1 == dx2 * dx2 + dy2 * dy2;
}

SurfaceAuditSummary audit_surfaces(const PointSet& s, long threshold, long line_cap,
                                   unsigned long long probe_seed) {
  const std::size_t n = s.size();
  if (n < 2) throw DataError("surface audit needs at least two points");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (s.points[i].x == s.points[j].x || s.points[i].y == s.points[j].y) {
        throw DataError("surface audit needs pairwise distinct x- and y-coordinates "
                        "(offending points: " +
                        point_str(s.points[i]) + ", " + point_str(s.points[j]) + ")");
      }
    }
  }

  std::vector<SigmaSurface> surfaces;
  surfaces.reserve(n * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) surfaces.emplace_back(s.points[i], s.points[j]);
    }
  }

  SurfaceAuditSummary summary;
  summary.surfaces = static_cast<long>(surfaces.size());

  const PointSet probe_set = random_points(50, probe_seed);
  for (const SigmaSurface& surf : surfaces) {
    summary.slanted_failures += slanted_audit(surf, probe_set.points).failures;
  }

  const long m = static_cast<long>(surfaces.size());
  const long pair_total = m * (m - 1) / 2;
  long max_count = 0;
  long duplicates = 0;
  std::string violation;
  std::exception_ptr pending;
#pragma omp parallel for reduction(max : max_count) reduction(+ : duplicates) \
    schedule(dynamic, 64)
  for (long idx = 0; idx < pair_total; ++idx) {
    try {
      // Unrank idx into the pair (i, j), i < j.
      long i = 0;
      long rem = idx;
      while (rem >= m - 1 - i) {
        rem -= m - 1 - i;
        ++i;
      }
      const long j = i + 1 + rem;
      const SigmaSurface& s1 = surfaces[i];
      const SigmaSurface& s2 = surfaces[j];
      if (s1.matrix.proportional_to(s2.matrix)) {
        ++duplicates;
      }
      const PairIntersection pi = pair_intersection_audit(s1, s2, s);
      if (pi.count > max_count) max_count = pi.count;
      if (pi.count > 3) {
#pragma omp critical
        {
          violation = "surfaces of " + point_str(s1.p) + "," + point_str(s1.q) + " and " +
                      point_str(s2.p) + "," + point_str(s2.q) + " meet in " +
                      std::to_string(pi.count) + " admissible pairs";
        }
      }
    } catch (...) {
#pragma omp critical
      {
        if (!pending) pending = std::current_exception();
      }
    }
  }
  if (pending) std::rethrow_exception(pending);
  if (!violation.empty()) {
    throw InternalError("pairwise surface intersection exceeds 3: " + violation);
  }
  summary.pairs_checked = pair_total;
  summary.max_pair_intersection = max_count;
  summary.duplicate_surfaces = duplicates;
  summary.quadruples = enumerate_Q(s, threshold, line_cap).quadruples.size();
  return summary;
}

}  // namespace uat
