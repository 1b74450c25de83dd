#include "zdyn/polytope.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "zdyn/error.hpp"

namespace zdyn {
namespace {

using Point = std::vector<double>;

double dot3(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double max_abs_difference(const Point& a, const Point& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

// Calls f(indices) for every k-subset of {0..n-1}.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Point cross(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

Polytope Polytope::from_halfspaces(std::size_t dimension, std::vector<std::vector<double>> normals) {
  if (dimension == 0 || dimension > 3) {
    throw Error(ErrorKind::DimensionUnsupported, "polytopes are supported in dimensions 1 to 3");
  }
  Polytope p;
  p.dimension = dimension;
  for (auto& c : normals) {
    if (c.size() != dimension) throw Error(ErrorKind::InvalidArgument, "normal has wrong dimension");
    const double scale = std::max(1.0, std::sqrt(dot3(c, c)));
    const bool seen = std::any_of(p.normals.begin(), p.normals.end(), [&](const Point& kept) {
      return max_abs_difference(kept, c) <= 1e-12 * scale;
    });
    if (!seen) p.normals.push_back(std::move(c));
  }

  const auto d = static_cast<Eigen::Index>(dimension);
  for_each_subset(p.normals.size(), dimension, [&](const std::vector<std::size_t>& subset) {
    Eigen::MatrixXd a(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index c = 0; c < d; ++c) a(r, c) = p.normals[subset[static_cast<std::size_t>(r)]][static_cast<std::size_t>(c)];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) return;
    const Eigen::VectorXd x = lu.solve(Eigen::VectorXd::Ones(d));
    Point v(x.data(), x.data() + d);
    for (const auto& c : p.normals) {
      if (dot3(c, v) > 1.0 + 1e-9) return;
    }
    for (const auto& kept : p.vertices) {
      if (max_abs_difference(kept, v) <= 1e-9) return;
    }
    p.vertices.push_back(std::move(v));
  });
  if (p.vertices.size() < dimension + 1) {
    throw Error(ErrorKind::InvalidArgument, "half-spaces do not bound a polytope");
  }

  for (const auto& c : p.normals) {
    std::vector<std::size_t> on_facet;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      if (std::fabs(dot3(c, p.vertices[i]) - 1.0) <= 1e-9) on_facet.push_back(i);
    }
    p.facets.push_back(std::move(on_facet));
  }
  return p;
}

bool Polytope::contains(const std::vector<double>& x, double tolerance) const {
  return std::all_of(normals.begin(), normals.end(),
                     [&](const Point& c) { return dot3(c, x) <= 1.0 + tolerance; });
}

std::vector<std::size_t> polygon_order(const Polytope& p) {
  std::vector<std::size_t> order(p.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::atan2(p.vertices[a][1], p.vertices[a][0]) <
           std::atan2(p.vertices[b][1], p.vertices[b][0]);
  });
  return order;
}

std::vector<std::size_t> ordered_facet(const Polytope& p, std::size_t facet) {
  if (p.dimension == 2) return p.facets.at(facet);
  std::vector<std::size_t> ids = p.facets.at(facet);
  if (ids.size() < 3) return ids;
  Point centroid(3, 0.0);
  for (std::size_t i : ids) {
    for (std::size_t k = 0; k < 3; ++k) centroid[k] += p.vertices[i][k] / static_cast<double>(ids.size());
  }
  const Point& n = p.normals[facet];
  Point u(3);
  for (std::size_t k = 0; k < 3; ++k) u[k] = p.vertices[ids[0]][k] - centroid[k];
  const Point w = cross(n, u);
  auto angle = [&](std::size_t i) {
    Point r(3);
    for (std::size_t k = 0; k < 3; ++k) r[k] = p.vertices[i][k] - centroid[k];
    return std::atan2(dot3(r, w), dot3(r, u));
  };
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) { return angle(a) < angle(b); });
  return ids;
}

double polytope_volume(const Polytope& p) {
  switch (p.dimension) {
    case 1: {
      double lo = 0.0, hi = 0.0;
      for (const auto& v : p.vertices) {
        lo = std::min(lo, v[0]);
        hi = std::max(hi, v[0]);
      }
      return hi - lo;
    }
    case 2: {
      const auto order = polygon_order(p);
      double twice_area = 0.0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        const Point& a = p.vertices[order[i]];
        const Point& b = p.vertices[order[(i + 1) % order.size()]];
        twice_area += a[0] * b[1] - a[1] * b[0];
      }
      return std::fabs(twice_area) / 2.0;
    }
    case 3: {
      double six_volume = 0.0;
      for (std::size_t f = 0; f < p.facets.size(); ++f) {
        const auto ids = ordered_facet(p, f);
        for (std::size_t i = 1; i + 1 < ids.size(); ++i) {
          const Point& a = p.vertices[ids[0]];
          const Point& b = p.vertices[ids[i]];
          const Point& c = p.vertices[ids[i + 1]];
          six_volume += std::fabs(dot3(a, cross(b, c)));
        }
      }
      return six_volume / 6.0;
    }
    default: throw Error(ErrorKind::DimensionUnsupported, "volume needs dimension 1 to 3");
  }
}

}  // namespace zdyn
