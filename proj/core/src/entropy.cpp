#include "zdyn/entropy.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "zdyn/error.hpp"

namespace zdyn {
namespace {

Vector normalized(Vector v) {
  const double n = norm(v);
  for (double& x : v) x /= n;
  return v;
}

Vector cross(const Vector& a, const Vector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Distinct lines through the origin, as unit normals with a canonical sign.
std::vector<Vector> distinct_normals(const LyapunovList& list) {
  std::vector<Vector> out;
  for (const auto& e : list.entries) {
    if (norm(e.vector) == 0.0) continue;
    Vector n = normalized(e.vector);
    for (double x : n) {
      if (std::fabs(x) > 1e-12) {
        if (x < 0) {
          for (double& y : n) y = -y;
        }
        break;
      }
    }
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Vector& kept) {
      double diff = 0.0;
      for (std::size_t i = 0; i < n.size(); ++i) diff = std::max(diff, std::fabs(kept[i] - n[i]));
      return diff < 1e-12;
    });
    if (!seen) out.push_back(std::move(n));
  }
  return out;
}

// Directions of the lines {n.x = 0} in the plane, sorted by angle in [-pi, pi).
std::vector<double> line_angles(const std::vector<std::pair<double, double>>& normals) {
  std::vector<double> angles;
  for (const auto& [a, b] : normals) {
    const double theta = std::atan2(a, -b);
    angles.push_back(theta);
    angles.push_back(theta >= 0 ? theta - std::numbers::pi : theta + std::numbers::pi);
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end(),
                           [](double x, double y) { return std::fabs(x - y) < 1e-12; }),
               angles.end());
  return angles;
}

// One direction strictly inside each sector cut out by the lines.
std::vector<std::pair<double, double>> sector_bisectors(
    const std::vector<std::pair<double, double>>& normals) {
  const auto angles = line_angles(normals);
  if (angles.empty()) return {{1.0, 0.0}};
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double next = i + 1 < angles.size() ? angles[i + 1] : angles[0] + 2 * std::numbers::pi;
    const double mid = 0.5 * (angles[i] + next);
    out.emplace_back(std::cos(mid), std::sin(mid));
  }
  return out;
}

std::vector<Vector> vertex_rays_3d(const std::vector<Vector>& normals) {
  std::vector<Vector> rays;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      const Vector c = cross(normals[i], normals[j]);
      if (norm(c) < 1e-12) continue;
      const Vector r = normalized(c);
      for (double sign : {1.0, -1.0}) {
        Vector s = r;
        for (double& x : s) x *= sign;
        const bool seen = std::any_of(rays.begin(), rays.end(), [&](const Vector& kept) {
          return std::fabs(kept[0] - s[0]) + std::fabs(kept[1] - s[1]) + std::fabs(kept[2] - s[2]) < 1e-12;
        });
        if (!seen) rays.push_back(s);
      }
    }
  }
  return rays;
}

std::vector<Vector> interior_candidates(const LyapunovList& list) {
  const auto normals = distinct_normals(list);
  switch (list.d) {
    case 1:
      if (normals.empty()) return {{1.0}};
      return {{1.0}, {-1.0}};
    case 2: {
      std::vector<std::pair<double, double>> n2;
      for (const auto& n : normals) n2.emplace_back(n[0], n[1]);
      std::vector<Vector> out;
      for (const auto& [x, y] : sector_bisectors(n2)) out.push_back({x, y});
      return out;
    }
    case 3: {
      if (normals.empty()) return {{1.0, 0.0, 0.0}};
      if (normals.size() == 1) {
        Vector minus = normals[0];
        for (double& x : minus) x = -x;
        return {normals[0], minus};
      }
      std::vector<Vector> out;
      for (const Vector& r : vertex_rays_3d(normals)) {
        // tangent plane at r
        Vector helper = std::fabs(r[0]) < 0.9 ? Vector{1, 0, 0} : Vector{0, 1, 0};
        const Vector e1 = normalized(cross(r, helper));
        const Vector e2 = cross(r, e1);
        std::vector<std::pair<double, double>> through;
        double clearance = 0.1;
        for (const auto& n : normals) {
          const double offset = std::fabs(dot(n, r));
          if (offset < 1e-9) {
            through.emplace_back(dot(n, e1), dot(n, e2));
          } else {
            clearance = std::min(clearance, 0.5 * offset);
          }
        }
        for (const auto& [a, b] : sector_bisectors(through)) {
          Vector p(3);
          for (std::size_t k = 0; k < 3; ++k) p[k] = r[k] + clearance * (a * e1[k] + b * e2[k]);
          out.push_back(normalized(p));
        }
      }
      return out;
    }
    default:
      throw Error(ErrorKind::DimensionUnsupported,
                  "cone decomposition supports d <= 3, got d = " + std::to_string(list.d));
  }
}

std::size_t lyapunov_rank(const LyapunovList& list) {
  if (list.entries.empty()) return 0;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(list.entries.size()), static_cast<Eigen::Index>(list.d));
  for (std::size_t i = 0; i < list.entries.size(); ++i) {
    for (std::size_t k = 0; k < list.d; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = list.entries[i].vector[k];
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-12);
  return static_cast<std::size_t>(lu.rank());
}

}  // namespace

double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

double directional_entropy(const LyapunovList& list, const Vector& t) {
  if (t.size() != list.d) throw Error(ErrorKind::InvalidArgument, "direction has wrong dimension");
  double h = 0.0;
  for (const auto& e : list.entries) h += std::max(dot(e.vector, t), 0.0);
  return h;
}

std::vector<Cone> cone_decomposition(const LyapunovList& list) {
  std::vector<Cone> cones;
  for (const Vector& p : interior_candidates(list)) {
    Cone cone;
    cone.signs.reserve(list.entries.size());
    cone.gradient.assign(list.d, 0.0);
    bool generic = true;
    for (const auto& e : list.entries) {
      const double s = dot(e.vector, p);
      if (norm(e.vector) == 0.0) {
        cone.signs.push_back(0);
        continue;
      }
      if (s == 0.0) {
        generic = false;
        break;
      }
      cone.signs.push_back(s > 0 ? 1 : -1);
      if (s > 0) {
        for (std::size_t k = 0; k < list.d; ++k) cone.gradient[k] += e.vector[k];
      }
    }
    if (!generic) continue;
    const bool seen = std::any_of(cones.begin(), cones.end(),
                                  [&](const Cone& c) { return c.signs == cone.signs; });
    if (seen) continue;
    cone.interior = p;
    cones.push_back(std::move(cone));
  }
  return cones;
}

std::vector<Vector> arrangement_rays(const LyapunovList& list) {
  const auto normals = distinct_normals(list);
  if (list.d == 2) {
    std::vector<std::pair<double, double>> n2;
    for (const auto& n : normals) n2.emplace_back(n[0], n[1]);
    std::vector<Vector> out;
    for (double a : line_angles(n2)) out.push_back({std::cos(a), std::sin(a)});
    return out;
  }
  if (list.d == 3) return vertex_rays_3d(normals);
  if (list.d == 1) return {};
  throw Error(ErrorKind::DimensionUnsupported, "arrangement rays need d <= 3");
}

Polytope unit_ball(const LyapunovList& list) {
  if (list.d == 0 || list.d > 3) {
    throw Error(ErrorKind::DimensionUnsupported,
                "unit balls are built for d <= 3, got d = " + std::to_string(list.d));
  }
  if (lyapunov_rank(list) < list.d) {
    throw Error(ErrorKind::NotANorm, "Lyapunov vectors do not span R^d; h vanishes on a line");
  }
  const auto cones = cone_decomposition(list);
  std::vector<Vector> normals;
  for (const auto& c : cones) {
    if (norm(c.gradient) < 1e-12) {
      throw Error(ErrorKind::NotANorm, "h vanishes on a full cone of directions");
    }
    normals.push_back(c.gradient);
  }
  for (const auto& r : arrangement_rays(list)) {
    if (directional_entropy(list, r) < 1e-12) {
      throw Error(ErrorKind::NotANorm, "h vanishes on an arrangement ray");
    }
  }
  return Polytope::from_halfspaces(list.d, std::move(normals));
}

double octahedron_volume(std::size_t d) {
  double factorial = 1.0;
  for (std::size_t k = 2; k <= d; ++k) factorial *= static_cast<double>(k);
  return std::ldexp(1.0, static_cast<int>(d)) / factorial;
}

double fried_average_entropy(const LyapunovList& list) {
  return octahedron_volume(list.d) / polytope_volume(unit_ball(list));
}

double fried_example_form(const LyapunovList& list) {
  return octahedron_volume(list.d) * polytope_volume(unit_ball(list));
}

double fried_average_entropy(const ActionSpec& spec) {
  return fried_average_entropy(lyapunov_list(spec));
}

EntropyBounds entropy_bounds(const LyapunovList& list) {
  const Polytope ball = unit_ball(list);
  EntropyBounds b;
  double far = 0.0;
  for (const auto& v : ball.vertices) far = std::max(far, norm(v));
  b.c1 = 1.0 / far;
  for (const auto& c : ball.normals) b.c2 = std::max(b.c2, norm(c));
  return b;
}

double relational_entropy(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() > 20) {
    throw Error(ErrorKind::InvalidArgument,
                "relational entropy enumerates all subsets; at most 20 pairs, got " +
                    std::to_string(pairs.size()));
  }
  double best = -INFINITY;
  const std::size_t subsets = std::size_t{1} << pairs.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    double s = 0.0, t = 0.0;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (mask >> j & 1u) {
        s += pairs[j].first;
        t += pairs[j].second;
      }
    }
    best = std::max(best, std::max(s, t) + std::log1p(std::exp(-std::fabs(s - t))));
  }
  return best;
}

}  // namespace zdyn
