#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "uat/geom2d.hpp"

namespace uat {

// Point-set text format: a mandatory field header, an optional partition
// header, then one point per line.
//
//   # field: rational            (or: quad <d>, tower <d1> <d2>)
//   # parts: 3
//   x y [part]
//
// Coordinates use the scalar text syntax; '#' starts a comment.
PointSet read_points(std::istream& in);
PointSet read_points_file(const std::string& path);

void write_points(std::ostream& out, const PointSet& ps);
void write_points_file(const std::string& path, const PointSet& ps);

// Value-set text format: one scalar per line; '#' starts a comment.
std::vector<Scalar> read_values(std::istream& in);
std::vector<Scalar> read_values_file(const std::string& path);

}  // namespace uat
