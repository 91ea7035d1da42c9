#include <omp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uat/constructions.hpp"
#include "uat/counting.hpp"
#include "uat/errors.hpp"
#include "uat/gridstats.hpp"
#include "uat/pts_io.hpp"
#include "uat/scaling.hpp"
#include "uat/surfaces4d.hpp"
#include "uat/symbolic.hpp"

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;
using uat::ConvexSet;
using uat::DataError;
using uat::PointSet;
using uat::Scalar;
using uat::TriangleCount;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void apply_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

// Report skeleton: every report carries the same six keys, in this order;
// inapplicable sections stay null so reruns diff cleanly.
Json base_report(const std::string& subcommand) {
  Json j;
  j["subcommand"] = subcommand;
  j["params"] = Json::object();
  j["counts"] = nullptr;
  j["audits"] = nullptr;
  j["slope"] = nullptr;
  j["elapsed_ms"] = nullptr;
  return j;
}

Json counts_json(const TriangleCount& c) {
  Json j;
  j["total"] = c.total;
  j["restricted"] = c.restricted ? Json(*c.restricted) : Json(nullptr);
  j["classes"] = nullptr;
  return j;
}

std::vector<Scalar> squares_up_to(long n) {
  std::vector<Scalar> v;
  for (long i = 1; i <= n; ++i) v.push_back(Scalar(i) * Scalar(i));
  return v;
}

long ceil_sqrt(std::size_t n) {
  long c = 1;
  while (static_cast<std::size_t>(c) * static_cast<std::size_t>(c) < n) ++c;
  return c;
}

struct GenerateOpts {
  std::string construction;
  long n = 0;
  std::string alpha = "2";
  unsigned long long seed = 12345;
  long coord_bound = 1000;
  std::string a_file;
  std::string b_file;
  std::string out;
  int threads = 0;
};

PointSet build_construction(const GenerateOpts& o) {
  const Scalar alpha = Scalar::parse(o.alpha);
  if (o.construction == "lattice") return uat::lattice_section(o.n);
  if (o.construction == "three-parallel") return uat::three_parallel(o.n, alpha);
  if (o.construction == "one-parallel") return uat::one_parallel_pair(o.n);
  if (o.construction == "general") return uat::general_position(o.n, alpha);
  if (o.construction == "convex-grid") {
    const std::vector<Scalar> av =
        o.a_file.empty() ? squares_up_to(o.n) : uat::read_values_file(o.a_file);
    const std::vector<Scalar> bv =
        o.b_file.empty() ? squares_up_to(o.n) : uat::read_values_file(o.b_file);
    return uat::convex_grid(ConvexSet(av), ConvexSet(bv));
  }
  return uat::random_points(o.n, o.seed, o.coord_bound);
}

Json run_generate(const GenerateOpts& o) {
  apply_threads(o.threads);
  const PointSet ps = build_construction(o);
  uat::write_points_file(o.out, ps);
  Json j = base_report("generate");
  j["params"]["construction"] = o.construction;
  j["params"]["n"] = o.n;
  j["params"]["alpha"] = Scalar::parse(o.alpha).str();
  j["params"]["seed"] = o.seed;
  j["params"]["coord_bound"] = o.coord_bound;
  j["params"]["out"] = o.out;
  j["audits"] = Json{{"points_written", ps.size()}, {"parts", ps.num_parts}};
  return j;
}

struct CountOpts {
  std::string in;
  std::string method = "bucket";
  int threads = 0;
};

Json run_count(const CountOpts& o) {
  apply_threads(o.threads);
  const PointSet ps = uat::read_points_file(o.in);
  const TriangleCount c =
      o.method == "brute" ? uat::count_brute_force(ps) : uat::count_line_bucket(ps);
  Json j = base_report("count");
  j["params"]["in"] = o.in;
  j["params"]["method"] = o.method;
  j["params"]["n"] = ps.size();
  j["counts"] = counts_json(c);
  return j;
}

struct SurfaceOpts {
  std::string in;
  long k = 2;
  long cap = 0;  // 0: use ceil(sqrt(n))
  unsigned long long seed = 12345;
  int threads = 0;
};

Json run_audit_surfaces(const SurfaceOpts& o) {
  apply_threads(o.threads);
  const PointSet ps = uat::read_points_file(o.in);
  const long cap = o.cap > 0 ? o.cap : ceil_sqrt(ps.size());
  const uat::SurfaceAuditSummary s = uat::audit_surfaces(ps, o.k, cap, o.seed);
  Json j = base_report("audit-surfaces");
  j["params"]["in"] = o.in;
  j["params"]["k"] = o.k;
  j["params"]["cap"] = cap;
  j["params"]["seed"] = o.seed;
  j["params"]["n"] = ps.size();
  j["audits"] = Json{{"surfaces", s.surfaces},
                     {"pairs_checked", s.pairs_checked},
                     {"max_pair_intersection", s.max_pair_intersection},
                     {"slanted_failures", s.slanted_failures},
                     {"duplicate_surfaces", s.duplicate_surfaces},
                     {"quadruples", s.quadruples}};
  return j;
}

struct SeparabilityOpts {
  std::string alpha;
};

Json run_audit_separability(const SeparabilityOpts& o) {
  const Scalar alpha = Scalar::parse(o.alpha);
  const uat::BivarRatFunc f = uat::triple_line_map(alpha);
  const uat::BivarRatFunc q =
      uat::partial_derivative(f, 'x') / uat::partial_derivative(f, 'y');
  const bool separable = uat::separability_test(q);
  const uat::Decomposition d = uat::decompose_f(alpha);
  Json j = base_report("audit-separability");
  j["params"]["alpha"] = alpha.str();
  j["audits"] = Json{{"separable", separable}, {"s1", d.s1.str()},
                     {"s2", d.s2.str()},       {"phi", d.phi.str("x")},
                     {"psi", d.psi.str("y")},  {"h", d.h.str("u")},
                     {"identity_verified", true}};
  return j;
}

struct GridOpts {
  std::string a_file;
  std::string b_file;
  long k = 0;
  std::string out;
  int threads = 0;
};

void write_grid_csv(const std::string& path, const uat::RichCensus& ca,
                    const uat::RichCensus& cb, const uat::DeltaHistogram& da,
                    const uat::DeltaHistogram& db, const std::vector<long long>& taus,
                    const std::vector<long long>& m_curve, const uat::PartitionedCount& part) {
  std::ofstream csv(path);
  if (!csv) throw DataError("cannot open output file: " + path);
  csv << "section,key,value\n";
  for (const auto& [bucket, count] : ca.dyadic_histogram) {
    csv << "multiplicity_a," << bucket << "," << count << "\n";
  }
  for (const auto& [bucket, count] : cb.dyadic_histogram) {
    csv << "multiplicity_b," << bucket << "," << count << "\n";
  }
  const auto emit_delta = [&csv](const char* section, const uat::DeltaHistogram& h) {
    std::vector<Scalar> keys;
    for (const auto& [s, c] : h.counts) {
      (void)c;
      keys.push_back(s);
    }
    std::sort(keys.begin(), keys.end(), [](const Scalar& x, const Scalar& y) { return x < y; });
    for (const Scalar& s : keys) {
      csv << section << "," << s.str() << "," << h.counts.at(s) << "\n";
    }
  };
  emit_delta("delta_a", da);
  emit_delta("delta_b", db);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    csv << "m_at_least_a," << taus[i] << "," << m_curve[i] << "\n";
  }
  csv << "classes,rich_rich," << part.rich_rich << "\n";
  csv << "classes,rich_poor," << part.rich_poor << "\n";
  csv << "classes,poor_rich," << part.poor_rich << "\n";
  csv << "classes,poor_poor," << part.poor_poor << "\n";
  if (!csv.flush()) throw DataError("failed writing csv file: " + path);
}

Json run_gridstats(const GridOpts& o) {
  apply_threads(o.threads);
  const std::vector<Scalar> av = uat::read_values_file(o.a_file);
  const std::vector<Scalar> bv = uat::read_values_file(o.b_file);
  const ConvexSet a(av);
  const ConvexSet b(bv);
  const uat::PartitionedCount part = uat::rich_poor_partition(a, b, o.k);
  const uat::RichCensus ca = uat::rich_point_census(av, o.k);
  const uat::RichCensus cb = uat::rich_point_census(bv, o.k);
  const uat::DeltaHistogram da = uat::delta_histogram(av, av);
  const uat::DeltaHistogram db = uat::delta_histogram(bv, bv);

  const std::vector<long long> taus{1, 2, 4, 8, 16};
  std::vector<long long> m_curve;
  for (long long tau : taus) m_curve.push_back(da.m_at_least(tau));

  // Tail-decay exponent of M over tau in {2,4,8,16}; reported, not asserted.
  std::vector<uat::ScalingPoint> tail;
  for (std::size_t i = 1; i < taus.size(); ++i) {
    tail.push_back({static_cast<long>(taus[i]),
                    static_cast<unsigned long long>(m_curve[i])});
  }
  Json slope = nullptr;
  try {
    slope = uat::format_slope(uat::scaling_fit(tail).slope);
  } catch (const DataError&) {
    // too few nonzero tail points: leave the slope null
  }

  Json j = base_report("gridstats");
  j["params"]["a"] = o.a_file;
  j["params"]["b"] = o.b_file;
  j["params"]["k"] = o.k;
  j["params"]["out"] = o.out;
  Json classes;
  classes["rich_rich"] = part.rich_rich;
  classes["rich_poor"] = part.rich_poor;
  classes["poor_rich"] = part.poor_rich;
  classes["poor_poor"] = part.poor_poor;
  j["counts"] = Json{{"total", part.total()}, {"restricted", nullptr}, {"classes", classes}};
  Json m_json = Json::object();
  for (std::size_t i = 0; i < taus.size(); ++i) {
    m_json[std::to_string(taus[i])] = m_curve[i];
  }
  j["audits"] = Json{{"rich_points_a", ca.rich_points},
                     {"rich_points_b", cb.rich_points},
                     {"m_at_least_a", m_json}};
  j["slope"] = slope;
  if (!o.out.empty()) write_grid_csv(o.out, ca, cb, da, db, taus, m_curve, part);
  return j;
}

struct ScalingOpts {
  std::string construction;
  std::vector<long> n_list;
  std::string alpha = "2";
  unsigned long long seed = 12345;
  long coord_bound = 1000;
  std::string method = "bucket";
  std::string out;
  int threads = 0;
};

Json run_scaling(const ScalingOpts& o) {
  apply_threads(o.threads);
  const bool tripartite = o.construction == "three-parallel" ||
                          o.construction == "one-parallel" || o.construction == "general";
  struct Row {
    long n;
    TriangleCount count;
  };
  std::vector<Row> rows;
  std::vector<uat::ScalingPoint> series;
  for (long n : o.n_list) {
    GenerateOpts g;
    g.construction = o.construction;
    g.n = n;
    g.alpha = o.alpha;
    g.seed = o.seed;
    g.coord_bound = o.coord_bound;
    const PointSet ps = build_construction(g);
    const TriangleCount c =
        o.method == "brute" ? uat::count_brute_force(ps) : uat::count_line_bucket(ps);
    const unsigned long long fitted = tripartite && c.restricted ? *c.restricted : c.total;
    series.push_back({n, fitted});
    rows.push_back({n, c});
  }
  const uat::ScalingFit fit = uat::scaling_fit(series);
  for (long n : fit.excluded_n) {
    std::cerr << "warning: excluding n=" << n << " from the fit (zero count)\n";
  }

  Json j = base_report("scaling");
  j["params"]["construction"] = o.construction;
  j["params"]["n_list"] = o.n_list;
  j["params"]["alpha"] = Scalar::parse(o.alpha).str();
  j["params"]["seed"] = o.seed;
  j["params"]["coord_bound"] = o.coord_bound;
  j["params"]["method"] = o.method;
  Json series_json = Json::array();
  for (const Row& r : rows) {
    Json e;
    e["n"] = r.n;
    e["total"] = r.count.total;
    e["restricted"] = r.count.restricted ? Json(*r.count.restricted) : Json(nullptr);
    series_json.push_back(e);
  }
  j["audits"] = Json{{"series", series_json}, {"fitted", tripartite ? "restricted" : "total"}};
  j["slope"] = uat::format_slope(fit.slope);

  if (!o.out.empty()) {
    std::ofstream csv(o.out);
    if (!csv) throw DataError("cannot open output file: " + o.out);
    csv << "n,count_total,count_restricted,elapsed_ms\n";
    for (const Row& r : rows) {
      csv << r.n << "," << r.count.total << ",";
      if (r.count.restricted) csv << *r.count.restricted;
      csv << "," << r.count.elapsed_ms << "\n";
    }
    if (!csv.flush()) throw DataError("failed writing csv file: " + o.out);
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact unit-area triangle experiments"};
  app.require_subcommand(1);

  GenerateOpts gen;
  CLI::App* c_gen = app.add_subcommand("generate", "build a point configuration");
  c_gen->add_option("--construction", gen.construction, "generator name")
      ->required()
      ->check(CLI::IsMember(
          {"lattice", "three-parallel", "one-parallel", "general", "convex-grid", "random"}));
  c_gen->add_option("--n", gen.n, "points per part / side length")->required();
  c_gen->add_option("--alpha", gen.alpha, "frame parameter (scalar literal)");
  c_gen->add_option("--seed", gen.seed, "random seed");
  c_gen->add_option("--coord-bound", gen.coord_bound, "random coordinate bound");
  c_gen->add_option("--a", gen.a_file, "abscissa value file (convex-grid)");
  c_gen->add_option("--b", gen.b_file, "ordinate value file (convex-grid)");
  c_gen->add_option("--out", gen.out, "output .pts path")->required();
  c_gen->add_option("--threads", gen.threads, "worker cap");

  CountOpts cnt;
  CLI::App* c_cnt = app.add_subcommand("count", "count unit-area triangles");
  c_cnt->add_option("--in", cnt.in, "input .pts path")->required();
  c_cnt->add_option("--method", cnt.method, "counting method")
      ->check(CLI::IsMember({"brute", "bucket"}));
  c_cnt->add_option("--threads", cnt.threads, "worker cap");

  CLI::App* c_audit = app.add_subcommand("audit", "verify structural claims");
  c_audit->require_subcommand(1);

  SurfaceOpts surf;
  CLI::App* c_surf = c_audit->add_subcommand("surfaces", "pairwise surface intersections");
  c_surf->add_option("--in", surf.in, "input .pts path")->required();
  c_surf->add_option("--k", surf.k, "medium-rich line threshold");
  c_surf->add_option("--cap", surf.cap, "spanning-line cap (default ceil(sqrt(n)))");
  c_surf->add_option("--seed", surf.seed, "probe seed");
  c_surf->add_option("--threads", surf.threads, "worker cap");

  SeparabilityOpts sep;
  CLI::App* c_sep = c_audit->add_subcommand("separability", "product-form decomposition");
  c_sep->add_option("--alpha", sep.alpha, "parameter (scalar literal)")->required();

  GridOpts grid;
  CLI::App* c_grid = app.add_subcommand("gridstats", "convex grid statistics");
  c_grid->add_option("--a", grid.a_file, "abscissa value file")->required();
  c_grid->add_option("--b", grid.b_file, "ordinate value file")->required();
  c_grid->add_option("--k", grid.k, "richness threshold")->required();
  c_grid->add_option("--out", grid.out, "CSV output path");
  c_grid->add_option("--threads", grid.threads, "worker cap");

  ScalingOpts sca;
  CLI::App* c_sca = app.add_subcommand("scaling", "count growth against n");
  c_sca->add_option("--construction", sca.construction, "generator name")
      ->required()
      ->check(CLI::IsMember(
          {"lattice", "three-parallel", "one-parallel", "general", "convex-grid", "random"}));
  c_sca->add_option("--n-list", sca.n_list, "comma-separated n values")
      ->required()
      ->delimiter(',');
  c_sca->add_option("--alpha", sca.alpha, "frame parameter (scalar literal)");
  c_sca->add_option("--seed", sca.seed, "random seed");
  c_sca->add_option("--coord-bound", sca.coord_bound, "random coordinate bound");
  c_sca->add_option("--method", sca.method, "counting method")
      ->check(CLI::IsMember({"brute", "bucket"}));
  c_sca->add_option("--out", sca.out, "CSV output path");
  c_sca->add_option("--threads", sca.threads, "worker cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto t0 = Clock::now();
  try {
    Json j;
    if (app.got_subcommand(c_gen)) {
      j = run_generate(gen);
    } else if (app.got_subcommand(c_cnt)) {
      j = run_count(cnt);
    } else if (app.got_subcommand(c_audit)) {
      j = c_audit->got_subcommand(c_surf) ? run_audit_surfaces(surf)
                                          : run_audit_separability(sep);
    } else if (app.got_subcommand(c_grid)) {
      j = run_gridstats(grid);
    } else {
      j = run_scaling(sca);
    }
    j["elapsed_ms"] = ms_since(t0);
    std::cout << j.dump(2) << "\n";
    return 0;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const uat::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
