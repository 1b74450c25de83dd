#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zdyn/actions.hpp"
#include "zdyn/polytope.hpp"

namespace zdyn {

double dot(const Vector& a, const Vector& b);
double norm(const Vector& a);

/// h(t) = sum over the list of max(l.t, 0), in nats.
double directional_entropy(const LyapunovList& list, const Vector& t);

/// One full-dimensional cell of the arrangement {l.t = 0}; h is linear there.
struct Cone {
  std::vector<int> signs;  // sign of l.t per list entry (0 for zero vectors)
  Vector gradient;         // sum of the l with l.t > 0
  Vector interior;         // a unit vector inside the cell
};

/// Every cell exactly once, identified by its sign pattern. d <= 3, otherwise
/// DimensionUnsupported.
std::vector<Cone> cone_decomposition(const LyapunovList& list);

/// Rays on which the arrangement cells meet (d = 2: the lines l-perp;
/// d = 3: pairwise plane intersections). Unit vectors, both signs.
std::vector<Vector> arrangement_rays(const LyapunovList& list);

/// {t : h(t) <= 1}. Throws NotANorm if h vanishes on a nonzero vector.
Polytope unit_ball(const LyapunovList& list);

/// Volume of the cross-polytope {sum |t_i| <= 1}: 2^d / d!.
double octahedron_volume(std::size_t d);

/// 2^d / (d! vol U).
double fried_average_entropy(const LyapunovList& list);
double fried_average_entropy(const ActionSpec& spec);

/// (2^d / d!) vol U, the form in which worked examples are often quoted
/// (6 / (log 2 log 3) for x2x3). Not the same quantity as the above.
double fried_example_form(const LyapunovList& list);

/// Min and max of h on the Euclidean unit sphere.
struct EntropyBounds {
  double c1 = 0.0;
  double c2 = 0.0;
};
EntropyBounds entropy_bounds(const LyapunovList& list);

/// max over subsets E of log(prod_E e^s + prod_E e^t); at most 20 pairs,
/// InvalidArgument beyond.
double relational_entropy(const std::vector<std::pair<double, double>>& pairs);

}  // namespace zdyn
