#include "uat/scaling.hpp"

#include <cmath>
#include <cstdio>

#include "uat/errors.hpp"

namespace uat {

ScalingFit scaling_fit(const std::vector<ScalingPoint>& series) {
  long prev_n = 0;
  for (const ScalingPoint& p : series) {
    if (p.n <= prev_n) throw DataError("scaling series must have strictly increasing positive n");
    prev_n = p.n;
  }
  ScalingFit fit;
  std::vector<std::pair<double, double>> pts;
  for (const ScalingPoint& p : series) {
    if (p.count == 0) {
      fit.excluded_n.push_back(p.n);
      continue;
    }
    pts.emplace_back(std::log(static_cast<double>(p.n)),
                     std::log(static_cast<double>(p.count)));
  }
  if (pts.size() < 2) throw DataError("scaling fit needs at least two points with nonzero counts");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(pts.size());
  const double denom = m * sxx - sx * sx;
  fit.slope = (m * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / m;
  return fit;
}

std::string format_slope(double slope) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", slope);
  return std::string(buf);
}

}  // namespace uat
