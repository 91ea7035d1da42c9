#include "uat/constructions.hpp"

#include <cmath>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace uat {

namespace {

// 2^k as an exact rational, k possibly negative.
Rational pow2(long k) {
  const BigInt one(1);
  const BigInt shifted = one << static_cast<unsigned long>(k >= 0 ? k : -k);
  return k >= 0 ? Rational(shifted) : Rational(one, shifted);
}

void require_positive(long n, long least, const char* what) {
  if (n < least) {
    throw DataError(std::string(what) + " needs n >= " + std::to_string(least));
  }
}

}  // namespace

PointSet three_parallel(long n, const Scalar& alpha) {
  require_positive(n, 1, "three_parallel");
  if (alpha == Scalar(0) || alpha == Scalar(1)) {
    throw DataError("three_parallel: alpha must avoid 0 and 1 (the lines must be distinct)");
  }
  PointSet s;
  s.num_parts = 3;
  const Scalar one_minus_alpha = Scalar(1) - alpha;
  for (long i = 1; i <= n; ++i) s.add(Point2{Scalar(i) / one_minus_alpha, Scalar(0)}, 0);
  for (long j = 1; j <= n; ++j) s.add(Point2{Scalar(j) / alpha, Scalar(1)}, 1);
  for (long k = 0; k <= 2 * n - 2; ++k) s.add(Point2{Scalar(k), alpha}, 2);
  return s;
}

PointSet one_parallel_pair(long n) {
  require_positive(n, 2, "one_parallel_pair");
  PointSet s;
  s.num_parts = 3;
  for (long i = 1; i <= n; ++i) s.add(Point2{Scalar(pow2(i)) + Scalar(2), Scalar(0)}, 0);
  for (long j = 1; j <= n; ++j) s.add(Point2{Scalar(pow2(j)) + Scalar(2), Scalar(1)}, 1);
  // z depends on j - i only, so one point per nonzero offset.
  for (long k = -(n - 1); k <= n - 1; ++k) {
    if (k == 0) continue;
    const Scalar z = Scalar(1) / (Scalar(1) - Scalar(pow2(k)));
    s.add(Point2{Scalar(0), z}, 2);
  }
  return s;
}

PointSet general_position(long n, const Scalar& alpha) {
  require_positive(n, 2, "general_position");
  const Scalar root = sqrt_scalar(alpha * alpha + Scalar(8));
  const Scalar s1 = (alpha + root) / Scalar(2);
  const Scalar s2 = (alpha - root) / Scalar(2);
  PointSet s;
  s.num_parts = 3;
  for (long i = 1; i <= n; ++i) {
    const Scalar p2(pow2(i));
    const Scalar x = (p2 * s1 - s2) / (p2 - Scalar(1));
    s.add(Point2{x, Scalar(0)}, 0);
  }
  for (long j = 1; j <= n; ++j) {
    const Scalar p2(pow2(j));
    const Scalar y = (p2 * s1 - s2) / (p2 - Scalar(1));
    s.add(Point2{Scalar(0), y}, 1);
  }
  // z depends on i - j only.
  for (long k = -(n - 1); k <= n - 1; ++k) {
    if (k == 0) continue;
    const Scalar u(pow2(k));
    const Scalar z = (s2 - s1 * u) / (Scalar(1) - u);
    s.add(Point2{z, alpha - z}, 2);
  }
  return s;
}

NormalizationResult normalize_lines(const LineTriple& t) {
  if (t.l1 == t.l2 || t.l1 == t.l3 || t.l2 == t.l3) {
    throw DataError("line triple must be pairwise distinct");
  }
  const std::array<const CanonicalLine*, 3> lines = {&t.l1, &t.l2, &t.l3};
  const bool p01 = t.l1.parallel_to(t.l2);
  const bool p02 = t.l1.parallel_to(t.l3);
  const bool p12 = t.l2.parallel_to(t.l3);

  NormalizationResult out{TripleCase::all_parallel, Scalar(0),
                          AffineMap{Scalar(1), Scalar(0), Scalar(0), Scalar(1), Scalar(0), Scalar(0)},
                          AffineMap{Scalar(1), Scalar(0), Scalar(0), Scalar(1), Scalar(0), Scalar(0)},
                          {0, 1, 2}};

  if (p01 && p02) {
    const Scalar& a = t.l1.a();
    const Scalar& b = t.l1.b();
    const Scalar kappa = Scalar(1) / (t.l2.c() - t.l1.c());
    Scalar r1x(0), r1y(0);
    if (!b.is_zero()) {
      r1x = (t.l2.c() - t.l1.c()) / b;
    } else {
      r1y = -((t.l2.c() - t.l1.c()) / a);
    }
    out.kind = TripleCase::all_parallel;
    out.alpha = (t.l3.c() - t.l1.c()) / (t.l2.c() - t.l1.c());
    out.forward = AffineMap{r1x, r1y, kappa * a, kappa * b, Scalar(0), -(kappa * t.l1.c())};
  } else if (p01 || p02 || p12) {
    int first = 0, second = 1, crossing = 2;
    if (p02) {
      second = 2;
      crossing = 1;
    } else if (p12) {
      first = 1;
      second = 2;
      crossing = 0;
    }
    const CanonicalLine& pa = *lines[first];
    const CanonicalLine& pb = *lines[second];
    const CanonicalLine& cr = *lines[crossing];
    const Scalar kappa = Scalar(1) / (pb.c() - pa.c());
    const Scalar denom = cr.a() * pa.b() - cr.b() * pa.a();
    const Scalar mu = Scalar(1) / (kappa * denom);
    out.kind = TripleCase::one_pair;
    out.alpha = Scalar(0);
    out.forward = AffineMap{mu * cr.a(),  mu * cr.b(),  kappa * pa.a(), kappa * pa.b(),
                            -(mu * cr.c()), -(kappa * pa.c())};
    out.order = {first, second, crossing};
  } else {
    const Scalar d0 = t.l1.a() * t.l2.b() - t.l1.b() * t.l2.a();
    const Scalar mu1 = (t.l3.a() * t.l2.b() - t.l3.b() * t.l2.a()) / d0;
    const Scalar kappa1 = (t.l1.a() * t.l3.b() - t.l1.b() * t.l3.a()) / d0;
    const Scalar d1 = mu1 * kappa1 * d0;
    Scalar nu(1);
    try {
      nu = Scalar(1) / sqrt_scalar(abs(d1));
    } catch (const std::domain_error& e) {
      throw DataError(std::string("normalization scale is not expressible: ") + e.what());
    }
    const Scalar mu = nu * mu1;
    const Scalar kappa = nu * kappa1;
    out.kind = TripleCase::none_parallel;
    out.alpha = nu * (t.l3.c() - mu1 * t.l1.c() - kappa1 * t.l2.c());
    out.forward = AffineMap{mu * t.l1.a(),    mu * t.l1.b(),    kappa * t.l2.a(), kappa * t.l2.b(),
                            -(mu * t.l1.c()), -(kappa * t.l2.c())};
  }
  const Scalar det = out.forward.det();
  if (!(det == Scalar(1) || det == Scalar(-1))) {
    throw InternalError("normalization map determinant is not +-1");
  }
  out.inverse = out.forward.inverse();
  return out;
}

PointSet build_on_lines(const LineTriple& t, long n) {
  const NormalizationResult nr = normalize_lines(t);
  PointSet base;
  // Frame role occupied by each generator part (the none_parallel frame
  // lists the y-axis first, while the generator's first part is on y=0).
  std::array<int, 3> role_of_part = {0, 1, 2};
  switch (nr.kind) {
    case TripleCase::all_parallel:
      base = three_parallel(n, nr.alpha);
      break;
    case TripleCase::one_pair:
      base = one_parallel_pair(n);
      break;
    case TripleCase::none_parallel:
      base = general_position(n, nr.alpha);
      role_of_part = {1, 0, 2};
      break;
  }
  PointSet out;
  out.num_parts = 3;
  for (std::size_t i = 0; i < base.size(); ++i) {
    out.add(nr.inverse.apply(base.points[i]), nr.order[role_of_part[base.parts[i]]]);
  }
  return out;
}

PointSet lattice_section(long n) {
  require_positive(n, 4, "lattice_section");
  const long cols = static_cast<long>(std::ceil(std::sqrt(std::log2(static_cast<double>(n)))));
  PointSet s;
  for (long idx = 0; idx < n; ++idx) {
    s.add(Point2{Scalar(idx % cols), Scalar(idx / cols)});
  }
  return s;
}

std::pair<Scalar, long long> mode_area_count(const PointSet& s) {
  if (s.size() < 3) throw DataError("mode area needs at least 3 points");
  const int n = static_cast<int>(s.size());
  std::unordered_map<Scalar, long long, ScalarHash> freq;
  const Scalar two(2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const Scalar a2 = signed_double_area(s.points[i], s.points[j], s.points[k]);
        if (a2.is_zero()) continue;
        ++freq[abs(a2) / two];
      }
    }
  }
  if (freq.empty()) throw DataError("mode area undefined: all triples are collinear");
  const std::pair<const Scalar, long long>* best = nullptr;
  for (const auto& entry : freq) {
    if (best == nullptr || entry.second > best->second ||
        (entry.second == best->second && entry.first < best->first)) {
      best = &entry;
    }
  }
  return {best->first, best->second};
}

ConvexSet::ConvexSet(std::vector<Scalar> values) : values_(std::move(values)) {
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (!(values_[i - 1] < values_[i])) {
      throw DataError("convex set: not strictly increasing at index " + std::to_string(i));
    }
  }
  for (std::size_t i = 2; i < values_.size(); ++i) {
    if (!(values_[i] - values_[i - 1] > values_[i - 1] - values_[i - 2])) {
      throw DataError("convex set: consecutive differences not strictly increasing at index " +
                      std::to_string(i));
    }
  }
}

PointSet convex_grid(const ConvexSet& a, const ConvexSet& b) {
  PointSet s;
  for (const Scalar& x : a.values()) {
    for (const Scalar& y : b.values()) s.add(Point2{x, y});
  }
  return s;
}

PointSet random_points(long n, unsigned long long seed, long coord_bound) {
  if (n < 0) throw DataError("random_points: n must be nonnegative");
  if (coord_bound < 1) throw DataError("random_points: coordinate bound must be positive");
  std::mt19937_64 rng(seed);
  // Modulo mapping keeps the draw sequence identical across platforms.
  const auto draw = [&rng, coord_bound]() {
    const long num = -coord_bound + static_cast<long>(rng() % static_cast<unsigned long>(2 * coord_bound + 1));
    const long den = 1 + static_cast<long>(rng() % static_cast<unsigned long>(coord_bound));
    return Scalar(Rational(BigInt(num), BigInt(den)));
  };
  std::unordered_set<Scalar, ScalarHash> xs, ys;
  PointSet s;
  while (static_cast<long>(s.size()) < n) {
    const Scalar x = draw();
    const Scalar y = draw();
    if (xs.contains(x) || ys.contains(y)) continue;
    xs.insert(x);
    ys.insert(y);
    s.add(Point2{x, y});
  }
  return s;
}

}  // namespace uat
