#pragma once

#include <vector>

#include "zdyn/rational.hpp"

namespace zdyn {

/// Convex hull of integer points in dimension 1..3 with exact volume.
struct LatticeHull {
  std::vector<std::vector<long>> vertices;
  BigRational volume = 0;
};

/// d = 1: the extreme points; d = 2: Andrew's monotone chain (counterclockwise,
/// collinear points dropped); d = 3: incremental hull with exact orientation
/// tests, volume from integer tetrahedron determinants.
LatticeHull lattice_convex_hull(std::size_t d, std::vector<std::vector<long>> points);

}  // namespace zdyn
