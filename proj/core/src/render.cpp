#include "zdyn/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "zdyn/error.hpp"

namespace zdyn {
namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 60.0;

std::string svg_header(const std::string& title) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n"
      << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n"
      << "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">"
      << title << "</text>\n";
  return out.str();
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

double intercept(const Polytope& ball, std::size_t axis, double sign) {
  // largest s with s e_axis in the ball
  double s = INFINITY;
  for (const auto& c : ball.normals) {
    const double k = sign * c[axis];
    if (k > 0) s = std::min(s, 1.0 / k);
  }
  return sign * s;
}

}  // namespace

std::string format_real(double x, int digits) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

std::string fix_grid_csv(const FixGrid& grid) {
  std::string out = "n2/n1";
  for (long n1 = grid.n1_lo; n1 <= grid.n1_hi; ++n1) out += "," + std::to_string(n1);
  out += "\n";
  long n2 = grid.n2_hi;
  for (const auto& row : grid.rows) {
    out += std::to_string(n2--);
    for (const auto& cell : row) out += "," + cell.to_string();
    out += "\n";
  }
  return out;
}

std::string vertices_csv(const Polytope& ball, int digits) {
  std::vector<std::size_t> order(ball.vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (ball.dimension == 2) {
    order = polygon_order(ball);
  } else {
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return ball.vertices[a] < ball.vertices[b]; });
  }
  static const char* names[] = {"x", "y", "z"};
  std::string out;
  for (std::size_t k = 0; k < ball.dimension; ++k) out += (k ? "," : "") + std::string(names[k]);
  out += "\n";
  for (std::size_t i : order) {
    for (std::size_t k = 0; k < ball.dimension; ++k) {
      out += (k ? "," : "") + format_real(ball.vertices[i][k], digits);
    }
    out += "\n";
  }
  return out;
}

std::string ball_svg(const Polytope& ball, const std::string& title, int digits) {
  if (ball.dimension != 2) throw Error(ErrorKind::DimensionUnsupported, "SVG balls are drawn for d = 2");
  double extent = 0.0;
  for (const auto& v : ball.vertices) extent = std::max({extent, std::fabs(v[0]), std::fabs(v[1])});
  extent *= 1.15;
  const double scale = (kSize / 2 - kMargin) / extent;
  auto sx = [&](double x) { return fixed(kSize / 2 + x * scale); };
  auto sy = [&](double y) { return fixed(kSize / 2 - y * scale); };

  std::ostringstream out;
  out << svg_header(title);
  out << "<line x1=\"" << kMargin << "\" y1=\"400\" x2=\"" << kSize - kMargin
      << "\" y2=\"400\" stroke=\"black\"/>\n";
  out << "<line x1=\"400\" y1=\"" << kMargin << "\" x2=\"400\" y2=\"" << kSize - kMargin
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << kSize - kMargin + 8 << "\" y=\"405\" font-family=\"sans-serif\">t1</text>\n";
  out << "<text x=\"395\" y=\"" << kMargin - 8 << "\" font-family=\"sans-serif\">t2</text>\n";
  out << "<polygon fill=\"#cfe0f5\" stroke=\"#1f4e8c\" stroke-width=\"2\" points=\"";
  for (std::size_t i : polygon_order(ball)) {
    out << sx(ball.vertices[i][0]) << "," << sy(ball.vertices[i][1]) << " ";
  }
  out << "\"/>\n";
  for (std::size_t axis = 0; axis < 2; ++axis) {
    for (double sign : {1.0, -1.0}) {
      const double s = intercept(ball, axis, sign);
      const double x = axis == 0 ? s : 0.0;
      const double y = axis == 1 ? s : 0.0;
      out << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"4\" fill=\"#1f4e8c\"/>\n";
      out << "<text x=\"" << sx(x) << "\" y=\"" << sy(y) << "\" dx=\"6\" dy=\"-6\" font-family=\"sans-serif\" "
          << "font-size=\"14\">" << format_real(s, digits) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string omega_svg(const std::vector<OmegaPoint>& points,
                      const std::vector<EnvelopeSample>& envelope) {
  const double width = kSize - 2 * kMargin;
  auto sx = [&](double theta) { return fixed(kMargin + theta / (2 * std::numbers::pi) * width); };
  auto sy = [&](double y) { return fixed(kSize - kMargin - y * width); };

  std::ostringstream out;
  out << svg_header("directional pole and zero data");
  out << "<line x1=\"" << kMargin << "\" y1=\"" << kSize - kMargin << "\" x2=\"" << kSize - kMargin
      << "\" y2=\"" << kSize - kMargin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\""
      << kSize - kMargin << "\" stroke=\"black\"/>\n";
  const char* ticks[] = {"0", "pi/2", "pi", "3pi/2", "2pi"};
  for (int k = 0; k <= 4; ++k) {
    const double theta = k * std::numbers::pi / 2;
    out << "<text x=\"" << sx(theta) << "\" y=\"" << kSize - kMargin + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\">" << ticks[k] << "</text>\n";
  }
  for (double y : {0.0, 0.5, 1.0}) {
    out << "<text x=\"" << kMargin - 10 << "\" y=\"" << sy(y)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\">" << format_real(y, 2) << "</text>\n";
  }
  out << "<text x=\"400\" y=\"" << kSize - 15 << "\" text-anchor=\"middle\" font-family=\"sans-serif\">theta</text>\n";
  out << "<text x=\"20\" y=\"400\" font-family=\"sans-serif\">y</text>\n";
  for (const auto& p : points) {
    out << "<circle cx=\"" << sx(p.theta) << "\" cy=\"" << sy(p.y) << "\" r=\"1.5\" fill=\""
        << (p.pole ? "#b22222" : "#1f4e8c") << "\"/>\n";
  }
  if (!envelope.empty()) {
    out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (const auto& e : envelope) out << sx(e.theta) << "," << sy(std::exp(-e.entropy)) << " ";
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace zdyn
