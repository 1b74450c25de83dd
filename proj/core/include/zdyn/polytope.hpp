#pragma once

#include <cstddef>
#include <vector>

namespace zdyn {

/// Bounded polytope {x : c.x <= 1 for every normal c} containing the origin
/// strictly, in dimension 1..3.
struct Polytope {
  std::size_t dimension = 0;
  std::vector<std::vector<double>> normals;
  std::vector<std::vector<double>> vertices;
  /// Vertex indices on each facet, parallel to `normals`.
  std::vector<std::vector<std::size_t>> facets;

  /// Normals are deduplicated (1e-12); vertices come from d-subsets of the
  /// constraints, kept if feasible within 1e-9 and merged within 1e-9.
  static Polytope from_halfspaces(std::size_t dimension, std::vector<std::vector<double>> normals);

  std::size_t facet_count() const noexcept { return normals.size(); }
  bool contains(const std::vector<double>& x, double tolerance = 1e-9) const;
};

/// d = 1 length, d = 2 shoelace over angle-sorted vertices, d = 3 fan of
/// every facet from the origin.
double polytope_volume(const Polytope& p);

/// Facet vertices in cyclic order around the facet centroid (d = 3), or the
/// polygon vertices by angle (d = 2).
std::vector<std::size_t> ordered_facet(const Polytope& p, std::size_t facet);
std::vector<std::size_t> polygon_order(const Polytope& p);

}  // namespace zdyn
