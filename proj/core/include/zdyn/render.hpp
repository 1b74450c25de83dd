#pragma once

#include <string>
#include <vector>

#include "zdyn/periodic.hpp"
#include "zdyn/polytope.hpp"
#include "zdyn/zeta.hpp"

namespace zdyn {

/// printf %g with `digits` significant digits; "-0" becomes "0".
std::string format_real(double x, int digits);

/// Header "n2/n1,lo,...,hi", then one row per n2 from hi down to lo.
std::string fix_grid_csv(const FixGrid& grid);

/// Vertices one per line ("x,y" or "x,y,z"); 2D polygons in counterclockwise order.
std::string vertices_csv(const Polytope& ball, int digits);

/// 800x800 drawing of a 2D unit ball with axes and its axis intercepts labelled.
std::string ball_svg(const Polytope& ball, const std::string& title, int digits);

/// 800x800 scatter of (theta, y) over [0, 2 pi] x [0, 1]; poles and zeros in
/// different colours, the envelope as a polyline.
std::string omega_svg(const std::vector<OmegaPoint>& points,
                      const std::vector<EnvelopeSample>& envelope);

}  // namespace zdyn
