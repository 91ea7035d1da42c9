#pragma once

#include <string>
#include <vector>

namespace uat {

struct ScalingPoint {
  long n = 0;
  unsigned long long count = 0;
};

// Least-squares line through (log n, log count).  The only place the library
// touches floating point: counts stay exact everywhere else.
struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<long> excluded_n;  // points dropped for a zero count
};

// Requires strictly increasing positive n values and at least two points with
// nonzero counts after exclusion.
ScalingFit scaling_fit(const std::vector<ScalingPoint>& series);

// Fixed-point rendering with exactly four decimals, e.g. 2 -> "2.0000".
std::string format_slope(double slope);

}  // namespace uat
