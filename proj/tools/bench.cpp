#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uat/constructions.hpp"
#include "uat/counting.hpp"
#include "uat/gridstats.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int repeat) {
  double best = 0.0;
  for (int r = 0; r < repeat; ++r) {
    const auto t0 = Clock::now();
    fn();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (r == 0 || ms < best) best = ms;
  }
  return best;
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool same) {
  std::printf("%-22s %12.2f %12.2f %9.2fx  %s\n", name.c_str(), serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, same ? "ok" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial versus OpenMP kernel comparison"};
  long n = 80;
  long grid_side = 8;
  long k = 2;
  unsigned long long seed = 20240917;
  int threads = 0;
  int repeat = 3;
  app.add_option("--n", n, "random point count");
  app.add_option("--grid", grid_side, "square-numbers grid side");
  app.add_option("--k", k, "richness threshold");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--threads", threads, "worker cap");
  app.add_option("--repeat", repeat, "best-of repetitions");
  CLI11_PARSE(app, argc, argv);
  if (threads > 0) omp_set_num_threads(threads);

  const uat::PointSet pts = uat::random_points(n, seed);
  std::vector<uat::Scalar> sq;
  for (long i = 1; i <= grid_side; ++i) sq.push_back(uat::Scalar(i) * uat::Scalar(i));
  const uat::ConvexSet a(sq);
  const uat::ConvexSet b(sq);

  std::printf("n=%ld points, %ldx%ld grid, k=%ld, best of %d, max threads %d\n\n", n, grid_side,
              grid_side, k, repeat, omp_get_max_threads());
  std::printf("%-22s %12s %12s %10s\n", "kernel", "serial ms", "parallel ms", "speedup");

  bool all_ok = true;

  uat::TriangleCount bs, bp;
  const double t_bs = time_ms([&] { bs = uat::count_brute_force_serial(pts); }, repeat);
  const double t_bp = time_ms([&] { bp = uat::count_brute_force(pts); }, repeat);
  const bool brute_ok = bs.total == bp.total;
  all_ok = all_ok && brute_ok;
  row("brute force", t_bs, t_bp, brute_ok);

  uat::TriangleCount ls, lp;
  const double t_ls = time_ms([&] { ls = uat::count_line_bucket_serial(pts); }, repeat);
  const double t_lp = time_ms([&] { lp = uat::count_line_bucket(pts); }, repeat);
  const bool bucket_ok = ls.total == lp.total && ls.total == bs.total;
  all_ok = all_ok && bucket_ok;
  row("line bucket", t_ls, t_lp, bucket_ok);

  uat::PartitionedCount gs, gp;
  const double t_gs = time_ms([&] { gs = uat::rich_poor_partition_serial(a, b, k); }, repeat);
  const double t_gp = time_ms([&] { gp = uat::rich_poor_partition(a, b, k); }, repeat);
  const bool grid_ok = gs.rich_rich == gp.rich_rich && gs.rich_poor == gp.rich_poor &&
                       gs.poor_rich == gp.poor_rich && gs.poor_poor == gp.poor_poor;
  all_ok = all_ok && grid_ok;
  row("rich/poor partition", t_gs, t_gp, grid_ok);

  return all_ok ? 0 : 3;
}
