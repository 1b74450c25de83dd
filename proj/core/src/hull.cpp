#include "zdyn/hull.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <utility>

#include "zdyn/error.hpp"

namespace zdyn {
namespace {

using Point = std::vector<long>;
__extension__ typedef __int128 Wide;
__extension__ typedef unsigned __int128 UWide;

BigInt to_big(Wide x) {
  const bool negative = x < 0;
  UWide u = negative ? static_cast<UWide>(-x) : static_cast<UWide>(x);
  BigInt out = 0;
  BigInt place = 1;
  while (u) {
    out += place * static_cast<unsigned long>(u & 0xFFFFFFFFu);
    place *= BigInt(4294967296UL);
    u >>= 32;
  }
  return negative ? BigInt(-out) : out;
}

Wide cross2(const Point& o, const Point& a, const Point& b) {
  return static_cast<Wide>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<Wide>(a[1] - o[1]) * (b[0] - o[0]);
}

Wide orient3(const Point& a, const Point& b, const Point& c, const Point& p) {
  const Wide ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
  const Wide vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
  const Wide wx = p[0] - a[0], wy = p[1] - a[1], wz = p[2] - a[2];
  return ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) + uz * (vx * wy - vy * wx);
}

LatticeHull hull_2d(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  LatticeHull out;
  if (pts.size() < 3) {
    out.vertices = pts;
    return out;
  }
  std::vector<Point> chain(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross2(chain[k - 2], chain[k - 1], p) <= 0) --k;
    chain[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross2(chain[k - 2], chain[k - 1], pts[i]) <= 0) --k;
    chain[k++] = pts[i];
  }
  chain.resize(k - 1);
  Wide twice_area = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Point& a = chain[i];
    const Point& b = chain[(i + 1) % chain.size()];
    twice_area += static_cast<Wide>(a[0]) * b[1] - static_cast<Wide>(a[1]) * b[0];
  }
  out.volume = BigRational(to_big(twice_area), 2);
  out.volume.canonicalize();
  out.volume = abs(out.volume);
  out.vertices = std::move(chain);
  return out;
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Wide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// primitive outward normal, so coplanar triangles compare equal
std::array<Wide, 3> facet_normal(const Point& a, const Point& b, const Point& c) {
  const Wide ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
  const Wide vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
  std::array<Wide, 3> n = {uy * vz - uz * vy, uz * vx - ux * vz, ux * vy - uy * vx};
  const Wide g = wide_gcd(wide_gcd(n[0], n[1]), n[2]);
  if (g > 1) {
    for (auto& x : n) x /= g;
  }
  return n;
}

struct Face {
  std::size_t a, b, c;
  bool alive = true;
};

LatticeHull hull_3d(const std::vector<Point>& input) {
  // only the lowest and highest point of every (x, y) column can be a vertex
  std::map<std::pair<long, long>, std::pair<long, long>> columns;
  for (const auto& p : input) {
    auto [it, fresh] = columns.try_emplace({p[0], p[1]}, p[2], p[2]);
    if (!fresh) {
      it->second.first = std::min(it->second.first, p[2]);
      it->second.second = std::max(it->second.second, p[2]);
    }
  }
  std::vector<Point> pts;
  for (const auto& [xy, z] : columns) {
    pts.push_back({xy.first, xy.second, z.first});
    if (z.second != z.first) pts.push_back({xy.first, xy.second, z.second});
  }

  LatticeHull out;
  // initial tetrahedron
  std::size_t i1 = 1, i2 = 0, i3 = 0;
  bool found = false;
  for (; i1 < pts.size() && pts[i1] == pts[0]; ++i1) {
  }
  for (i2 = i1 + 1; i2 < pts.size() && !found; ++i2) {
    const Wide cx = static_cast<Wide>(pts[i1][1] - pts[0][1]) * (pts[i2][2] - pts[0][2]) -
                    static_cast<Wide>(pts[i1][2] - pts[0][2]) * (pts[i2][1] - pts[0][1]);
    const Wide cy = static_cast<Wide>(pts[i1][2] - pts[0][2]) * (pts[i2][0] - pts[0][0]) -
                    static_cast<Wide>(pts[i1][0] - pts[0][0]) * (pts[i2][2] - pts[0][2]);
    const Wide cz = static_cast<Wide>(pts[i1][0] - pts[0][0]) * (pts[i2][1] - pts[0][1]) -
                    static_cast<Wide>(pts[i1][1] - pts[0][1]) * (pts[i2][0] - pts[0][0]);
    if (cx == 0 && cy == 0 && cz == 0) continue;
    for (i3 = i2 + 1; i3 < pts.size(); ++i3) {
      if (orient3(pts[0], pts[i1], pts[i2], pts[i3]) != 0) {
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found) {
    out.vertices = pts;  // flat: zero volume
    return out;
  }

  std::vector<Face> faces;
  auto add_face = [&](std::size_t a, std::size_t b, std::size_t c, const Point& inside) {
    if (orient3(pts[a], pts[b], pts[c], inside) > 0) std::swap(b, c);
    faces.push_back({a, b, c});
  };
  const std::size_t tet[4] = {0, i1, i2, i3};
  for (int skip = 0; skip < 4; ++skip) {
    std::size_t f[3];
    int k = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != skip) f[k++] = tet[j];
    }
    add_face(f[0], f[1], f[2], pts[tet[skip]]);
  }

  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (p == 0 || p == i1 || p == i2 || p == i3) continue;
    std::set<std::pair<std::size_t, std::size_t>> visible_edges;
    bool any = false;
    for (auto& f : faces) {
      if (!f.alive) continue;
      if (orient3(pts[f.a], pts[f.b], pts[f.c], pts[p]) > 0) {
        f.alive = false;
        any = true;
        visible_edges.insert({f.a, f.b});
        visible_edges.insert({f.b, f.c});
        visible_edges.insert({f.c, f.a});
      }
    }
    if (!any) continue;
    for (const auto& [u, v] : visible_edges) {
      if (!visible_edges.count({v, u})) faces.push_back({u, v, p});
    }
    faces.erase(std::remove_if(faces.begin(), faces.end(), [](const Face& f) { return !f.alive; }),
                faces.end());
  }

  // triangles also pick up lattice points inside facets and on edges; a true vertex
  // touches at least three distinct facet planes
  std::map<std::size_t, std::set<std::array<Wide, 3>>> planes;
  for (const auto& f : faces) {
    const auto n = facet_normal(pts[f.a], pts[f.b], pts[f.c]);
    for (std::size_t i : {f.a, f.b, f.c}) planes[i].insert(n);
  }
  for (const auto& [i, normals] : planes) {
    if (normals.size() >= 3) out.vertices.push_back(pts[i]);
  }
  const std::size_t apex = planes.begin()->first;
  BigInt six_volume = 0;
  for (const auto& f : faces) {
    six_volume -= to_big(orient3(pts[f.a], pts[f.b], pts[f.c], pts[apex]));
  }
  out.volume = BigRational(six_volume, 6);
  out.volume.canonicalize();
  return out;
}

}  // namespace

LatticeHull lattice_convex_hull(std::size_t d, std::vector<std::vector<long>> points) {
  for (const auto& p : points) {
    if (p.size() != d) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
  }
  LatticeHull out;
  if (points.empty()) return out;
  switch (d) {
    case 1: {
      const auto [lo, hi] = std::minmax_element(points.begin(), points.end());
      out.vertices = {*lo};
      if (*hi != *lo) out.vertices.push_back(*hi);
      out.volume = (*hi)[0] - (*lo)[0];
      return out;
    }
    case 2: return hull_2d(std::move(points));
    case 3: return hull_3d(points);
    default:
      throw Error(ErrorKind::DimensionUnsupported, "convex hulls are built for d <= 3");
  }
}

}  // namespace zdyn
