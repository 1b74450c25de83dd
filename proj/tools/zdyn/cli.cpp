#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "zdyn/actions.hpp"
#include "zdyn/entropy.hpp"
#include "zdyn/error.hpp"
#include "zdyn/periodic.hpp"
#include "zdyn/render.hpp"
#include "zdyn/sync.hpp"
#include "zdyn/zeta.hpp"

namespace zdyn::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::string format = "auto";
  std::string out_path;
  int precision = 12;
  bool bits = false;
  unsigned workers = 0;
};

std::string resolve_format(const Context& ctx, const std::string& fallback,
                           std::initializer_list<const char*> allowed) {
  const std::string f = ctx.format == "auto" ? fallback : ctx.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw UsageError("--format " + f + " is not available here (choose from " + list + ")");
}

Json document() {
  Json j;
  j["schema"] = 1;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

long parse_long(const std::string& text) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("expected an integer, got '" + text + "'");
  return v;
}

// Accepts plain decimals and "logK" for the natural log of K.
double parse_real(std::string text) {
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  double sign = 1.0;
  if (!text.empty() && text[0] == '-') {
    sign = -1.0;
    text.erase(0, 1);
  }
  if (text.rfind("log", 0) == 0) return sign * std::log(parse_real(text.substr(3)));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("expected a real number, got '" + text + "'");
  return sign * v;
}

LatticePoint parse_point(const std::string& text) {
  LatticePoint n;
  for (const auto& part : split(text, ',')) n.push_back(parse_long(part));
  if (n.empty()) throw UsageError("expected a lattice point like 1,1");
  return n;
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long v = parse_long(text);
    return {v, v};
  }
  const long lo = parse_long(text.substr(0, dots));
  const long hi = parse_long(text.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

std::string point_text(const LatticePoint& n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

Json point_json(const LatticePoint& n) {
  Json a = Json::array();
  for (long x : n) a.push_back(x);
  return a;
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x == 0.0 ? 0.0 : x);
  return a;
}

double unit(const Context& ctx) { return ctx.bits ? std::numbers::ln2 : 1.0; }
const char* unit_name(const Context& ctx) { return ctx.bits ? "bits" : "nats"; }

LyapunovList scaled_list(const Context& ctx, const ActionSpec& spec) {
  const LyapunovList list = lyapunov_list(spec);
  return ctx.bits ? list.scaled(1.0 / std::numbers::ln2) : list;
}

std::string real(const Context& ctx, double x) { return format_real(x, ctx.precision); }

// ---------------------------------------------------------------------------
// action

std::string action_list(const Context& ctx) {
  const auto f = resolve_format(ctx, "text", {"text", "json"});
  if (f == "json") {
    Json j = document();
    j["actions"] = catalog_names();
    return dump(j);
  }
  std::string out;
  for (const auto& n : catalog_names()) out += n + "\n";
  return out;
}

std::string action_show(const Context& ctx, const std::string& name) {
  const auto f = resolve_format(ctx, "json", {"text", "json"});
  const ActionSpec spec = load_action(name);
  validate(spec);
  const LyapunovList list = scaled_list(ctx, spec);
  if (f == "json") {
    Json j = document();
    j["action"] = Json::parse(serialize_action(spec));
    j["units"] = unit_name(ctx);
    Json entries = Json::array();
    for (const auto& e : list.entries) {
      Json entry;
      entry["component"] = e.component;
      entry["place"] = place_label(spec.components[e.component].places[e.place]);
      entry["vector"] = vector_json(e.vector);
      if (e.log2_units) entry["log2_units"] = *e.log2_units;
      entries.push_back(entry);
    }
    j["lyapunov"] = entries;
    return dump(j);
  }
  std::ostringstream out;
  out << "name " << spec.name << "\nd " << spec.d << "\n";
  for (std::size_t ci = 0; ci < spec.components.size(); ++ci) {
    const auto& c = spec.components[ci];
    out << "component " << ci << " " << to_string(c.kind()) << " multiplicity " << c.multiplicity << "\n";
  }
  out << "lyapunov (" << unit_name(ctx) << ")\n";
  for (const auto& e : list.entries) {
    out << "  " << place_label(spec.components[e.component].places[e.place]) << ":";
    for (double x : e.vector) out << " " << real(ctx, x);
    out << "\n";
  }
  return out.str();
}

std::string action_validate(const Context& ctx, const std::string& name) {
  const auto f = resolve_format(ctx, "text", {"text", "json"});
  const ActionSpec spec = load_action(name);
  validate(spec);
  const auto entries = lyapunov_list(spec).entries.size();
  if (f == "json") {
    Json j = document();
    j["valid"] = true;
    j["name"] = spec.name;
    j["d"] = spec.d;
    j["components"] = spec.components.size();
    j["lyapunov_entries"] = entries;
    return dump(j);
  }
  return "ok: " + spec.name + " d=" + std::to_string(spec.d) +
         " components=" + std::to_string(spec.components.size()) +
         " lyapunov=" + std::to_string(entries) + "\n";
}

// ---------------------------------------------------------------------------
// entropy

std::string entropy_eval(const Context& ctx, const std::string& name, const std::string& t_text) {
  const auto f = resolve_format(ctx, "text", {"text", "json"});
  const ActionSpec spec = load_action(name);
  Vector t;
  for (const auto& part : split(t_text, ',')) t.push_back(parse_real(part));
  if (t.size() != spec.d) throw UsageError("--t needs " + std::to_string(spec.d) + " coordinates");
  const double h = directional_entropy(lyapunov_list(spec), t) / unit(ctx);
  if (f == "json") {
    Json j = document();
    j["action"] = spec.name;
    j["t"] = vector_json(t);
    j["h"] = h;
    j["units"] = unit_name(ctx);
    return dump(j);
  }
  return real(ctx, h) + "\n";
}

std::string entropy_ball(const Context& ctx, const std::string& name) {
  const auto f = resolve_format(ctx, "text", {"text", "json", "csv", "svg"});
  const ActionSpec spec = load_action(name);
  const Polytope ball = unit_ball(scaled_list(ctx, spec));
  const double volume = polytope_volume(ball);
  if (f == "csv") return vertices_csv(ball, ctx.precision);
  if (f == "svg") return ball_svg(ball, spec.name + " unit ball", 5);
  if (f == "json") {
    Json j = document();
    j["action"] = spec.name;
    j["units"] = unit_name(ctx);
    j["dimension"] = ball.dimension;
    j["facets"] = ball.facet_count();
    j["volume"] = volume;
    Json vs = Json::array();
    for (const auto& v : ball.vertices) vs.push_back(vector_json(v));
    j["vertices"] = vs;
    Json ns = Json::array();
    for (const auto& c : ball.normals) ns.push_back(vector_json(c));
    j["normals"] = ns;
    return dump(j);
  }
  std::ostringstream out;
  out << "facets " << ball.facet_count() << "\nvertices " << ball.vertices.size() << "\nvolume "
      << real(ctx, volume) << "\n" << vertices_csv(ball, ctx.precision);
  return out.str();
}

std::string entropy_fried(const Context& ctx, const std::string& name) {
  const auto f = resolve_format(ctx, "text", {"text", "json"});
  const ActionSpec spec = load_action(name);
  const LyapunovList list = scaled_list(ctx, spec);
  const double volume = polytope_volume(unit_ball(list));
  const double h_star = fried_average_entropy(list);
  const double example = fried_example_form(list);

  Json j = document();
  j["action"] = spec.name;
  j["units"] = unit_name(ctx);
  j["volume"] = volume;
  j["h_star"] = h_star;
  j["octahedron_times_volume"] = example;
  std::ostringstream out;
  out << "volume " << real(ctx, volume) << "\n"
      << "h_star " << real(ctx, h_star) << "\n"
      << "octahedron_times_volume " << real(ctx, example) << "\n";
  if (spec.name == "toral_sqrt2_sqrt5" && !ctx.bits) {
    const double l1 = std::log(1 + std::sqrt(2.0));
    const double l2 = std::log(2 + std::sqrt(5.0));
    const double l3 = std::log(3 + std::sqrt(10.0));
    const double closed = 5.0 / (6.0 * l1 * l2 * l3);
    const double repeated = 5.0 / (6.0 * l1 * l3 * l3);
    j["closed_form_volume"] = closed;
    j["closed_form_relative_error"] = std::fabs(volume - closed) / closed;
    j["repeated_xi3_volume"] = repeated;
    j["repeated_xi3_flag"] = "the variant with log xi3 twice does not match the polytope";
    out << "closed_form_volume " << real(ctx, closed) << " (5/(6 log xi1 log xi2 log xi3), relative error "
        << format_real(std::fabs(volume - closed) / closed, 3) << ")\n"
        << "repeated_xi3_volume " << real(ctx, repeated) << " (log xi3 twice; does not match)\n";
  }
  return f == "json" ? dump(j) : out.str();
}

std::string entropy_bounds_cmd(const Context& ctx, const std::string& name) {
  const auto f = resolve_format(ctx, "text", {"text", "json"});
  const ActionSpec spec = load_action(name);
  const EntropyBounds b = entropy_bounds(scaled_list(ctx, spec));
  if (f == "json") {
    Json j = document();
    j["action"] = spec.name;
    j["units"] = unit_name(ctx);
    j["c1"] = b.c1;
    j["c2"] = b.c2;
    return dump(j);
  }
  return "c1 " + real(ctx, b.c1) + "\nc2 " + real(ctx, b.c2) + "\n";
}

std::string entropy_relational(const Context& ctx, const std::string& pairs_text) {
  const auto f = resolve_format(ctx, "text", {"text", "json"});
  std::vector<std::pair<double, double>> pairs;
  if (!pairs_text.empty()) {
    for (const auto& item : split(pairs_text, ',')) {
      const auto st = split(item, ':');
      if (st.size() != 2) throw UsageError("pairs look like s:t,s:t (got '" + item + "')");
      pairs.emplace_back(parse_real(st[0]), parse_real(st[1]));
    }
  }
  const double value = relational_entropy(pairs) / unit(ctx);
  if (f == "json") {
    Json j = document();
    j["pairs"] = pairs.size();
    j["relational_entropy"] = value;
    j["units"] = unit_name(ctx);
    return dump(j);
  }
  return real(ctx, value) + "\n";
}

// ---------------------------------------------------------------------------
// fix

std::string fix_count_cmd(const Context& ctx, const std::string& name, const std::string& n_text) {
  const auto f = resolve_format(ctx, "text", {"text", "json"});
  const ActionSpec spec = load_action(name);
  const LatticePoint n = parse_point(n_text);
  const FixCount count = fix_count(spec, n);
  if (f == "json") {
    Json j = document();
    j["action"] = spec.name;
    j["n"] = point_json(n);
    j["count"] = count.to_string();
    j["infinite"] = count.infinite;
    return dump(j);
  }
  return count.to_string() + "\n";
}

std::string fix_grid_cmd(const Context& ctx, const std::string& name, const std::string& n1_text,
                         const std::string& n2_text) {
  const auto f = resolve_format(ctx, "text", {"text", "json", "csv"});
  const ActionSpec spec = load_action(name);
  const auto [a, b] = parse_range(n1_text);
  const auto [c, d] = parse_range(n2_text);
  const FixGrid grid = fix_grid(spec, a, b, c, d);
  if (f == "csv") return fix_grid_csv(grid);
  if (f == "json") {
    Json j = document();
    j["action"] = spec.name;
    j["n1"] = {a, b};
    j["n2"] = {c, d};
    j["row_order"] = "n2 descending";
    Json rows = Json::array();
    for (const auto& row : grid.rows) {
      Json r = Json::array();
      for (const auto& cell : row) r.push_back(cell.to_string());
      rows.push_back(r);
    }
    j["rows"] = rows;
    return dump(j);
  }
  std::size_t width = 5;
  for (const auto& row : grid.rows) {
    for (const auto& cell : row) width = std::max(width, cell.to_string().size() + 1);
  }
  std::ostringstream out;
  out << std::setw(6) << "n2\\n1";
  for (long n1 = a; n1 <= b; ++n1) out << std::setw(static_cast<int>(width)) << n1;
  out << "\n";
  long n2 = d;
  for (const auto& row : grid.rows) {
    out << std::setw(6) << n2--;
    for (const auto& cell : row) {
      const std::string s = cell.to_string();
      // "∞" is three bytes but one column
      out << std::string(width - (cell.infinite ? 1 : s.size()), ' ') << s;
    }
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// hull

std::string hull_run(const Context& ctx, const std::string& name, const std::string& logN_text,
                     double delta, bool expansive_only, double radius) {
  const auto f = resolve_format(ctx, "text", {"text", "json", "csv"});
  const ActionSpec spec = load_action(name);
  std::vector<double> logNs;
  for (const auto& part : split(logN_text, ',')) logNs.push_back(parse_real(part));
  ScanOptions options;
  options.expansive_only = expansive_only;
  options.workers = ctx.workers;
  if (radius > 0) options.radius = radius;
  const auto records = hull_experiment(spec, logNs, delta, options);

  if (f == "json") {
    Json j = document();
    j["action"] = spec.name;
    j["expansive_only"] = expansive_only;
    Json rs = Json::array();
    for (const auto& r : records) {
      Json x;
      x["logN"] = r.logN;
      x["delta"] = r.delta;
      x["scan_radius"] = r.scan_radius;
      x["qualifying"] = r.qualifying;
      Json vs = Json::array();
      for (const auto& v : r.hull_vertices) vs.push_back(point_json(v));
      x["hull_vertices"] = vs;
      x["volume"] = r.volume;
      x["ratio"] = r.ratio;
      x["unit_ball_volume"] = r.unit_ball_volume;
      x["ratio_over_unit_ball"] = r.ratio_over_unit_ball;
      x["inner_bracket_exceptions"] = r.inner_bracket_exceptions;
      rs.push_back(x);
    }
    j["records"] = rs;
    return dump(j);
  }
  std::ostringstream out;
  const char* header =
      "logN,delta,scan_radius,qualifying,hull_vertices,volume,ratio,unit_ball_volume,ratio_over_unit_ball,"
      "inner_bracket_exceptions";
  if (f == "csv") {
    out << header << "\n";
    for (const auto& r : records) {
      out << real(ctx, r.logN) << "," << real(ctx, r.delta) << "," << real(ctx, r.scan_radius) << ","
          << r.qualifying << "," << r.hull_vertices.size() << "," << real(ctx, r.volume) << ","
          << real(ctx, r.ratio) << "," << real(ctx, r.unit_ball_volume) << ","
          << real(ctx, r.ratio_over_unit_ball) << "," << r.inner_bracket_exceptions << "\n";
    }
    return out.str();
  }
  for (const auto& r : records) {
    out << "logN " << real(ctx, r.logN) << ": " << r.qualifying << " points, hull volume "
        << real(ctx, r.volume) << ", ratio " << real(ctx, r.ratio) << " (unit ball "
        << real(ctx, r.unit_ball_volume) << ", ratio/vol " << real(ctx, r.ratio_over_unit_ball)
        << "), inner bracket exceptions " << r.inner_bracket_exceptions << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// zeta

std::string zeta_show(const Context& ctx, const std::string& name, const std::string& n_text, unsigned K) {
  const auto f = resolve_format(ctx, "text", {"text", "json"});
  const ActionSpec spec = load_action(name);
  const LatticePoint n = parse_point(n_text);
  Json j = document();
  j["action"] = spec.name;
  j["n"] = point_json(n);
  if (is_times2_times3(spec)) {
    const RationalZeta z = directional_zeta(spec, n);
    j["zeta"] = z.to_string();
    Json num = Json::array(), den = Json::array();
    for (const auto& c : z.numerator) num.push_back(c.get_str());
    for (const auto& c : z.denominator) den.push_back(c.get_str());
    j["numerator"] = num;
    j["denominator"] = den;
    return f == "json" ? dump(j) : z.to_string() + "\n";
  }
  if (!is_expansive(spec, n)) {
    throw Error(ErrorKind::NotExpansive, "n = " + point_text(n) + " is not an expansive direction");
  }
  const ZetaSeries s = zeta_series(spec, n, K);
  Json counts = Json::array(), coefficients = Json::array();
  for (const auto& a : s.counts) counts.push_back(a.get_str());
  for (const auto& b : s.coefficients) coefficients.push_back(to_string(b));
  j["closed_form"] = nullptr;
  j["counts"] = counts;
  j["series"] = coefficients;
  if (f == "json") return dump(j);
  std::ostringstream out;
  out << "no closed form for " << spec.name << "; series to order " << K << "\n";
  for (unsigned k = 0; k <= K; ++k) {
    out << "z^" << k << " " << to_string(s.coefficients[k]);
    if (k) out << "  (|Fix(alpha^" << k << "n)| = " << s.counts[k - 1].get_str() << ")";
    out << "\n";
  }
  return out.str();
}

std::string zeta_check(const Context& ctx, const std::string& name, const std::string& n_text,
                       unsigned K, long max_norm) {
  const auto f = resolve_format(ctx, "text", {"text", "json"});
  const ActionSpec spec = load_action(name);
  if (!is_times2_times3(spec)) {
    throw Error(ErrorKind::UnsupportedFamily, "closed forms exist only for times2_times3");
  }
  std::vector<LatticePoint> points;
  if (!n_text.empty()) {
    points.push_back(parse_point(n_text));
  } else {
    for (long a = -max_norm; a <= max_norm; ++a) {
      for (long b = -max_norm; b <= max_norm; ++b) {
        if (is_expansive(spec, {a, b})) points.push_back({a, b});
      }
    }
  }
  std::size_t failures = 0;
  Json results = Json::array();
  std::ostringstream out;
  for (const auto& n : points) {
    const RationalZeta z = directional_zeta(spec, n);
    const bool ok = zeta_series_check(spec, n, z, K);
    failures += !ok;
    results.push_back({{"n", point_json(n)}, {"zeta", z.to_string()}, {"pass", ok}});
    if (!ok || points.size() == 1) out << point_text(n) << " " << z.to_string() << (ok ? " pass\n" : " FAIL\n");
  }
  out << points.size() - failures << "/" << points.size() << " directions pass with K=" << K << "\n";
  if (failures) {
    throw Error(ErrorKind::ValidationError, std::to_string(failures) + " zeta series checks failed");
  }
  if (f == "json") {
    Json j = document();
    j["K"] = K;
    j["checked"] = points.size();
    j["failures"] = failures;
    j["results"] = results;
    return dump(j);
  }
  return out.str();
}

std::string zeta_omega(const Context& ctx, double radius, std::size_t bins) {
  const auto f = resolve_format(ctx, "text", {"text", "json", "csv", "svg"});
  const auto points = omega_set(radius);
  const auto envelope = omega_lower_envelope(lyapunov_list(catalog("times2_times3")), points, bins);
  double worst = 0.0;
  for (const auto& e : envelope) worst = std::max(worst, std::fabs(-std::log(e.y_min) - e.entropy));
  if (f == "svg") return omega_svg(points, envelope);
  if (f == "csv") {
    std::ostringstream out;
    out << "theta,y,kind,n1,n2\n";
    for (const auto& p : points) {
      out << real(ctx, p.theta) << "," << real(ctx, p.y) << "," << (p.pole ? "pole" : "zero") << ","
          << p.n[0] << "," << p.n[1] << "\n";
    }
    return out.str();
  }
  if (f == "json") {
    Json j = document();
    j["radius"] = radius;
    j["points"] = points.size();
    j["bins"] = bins;
    j["max_envelope_deviation"] = worst;
    Json env = Json::array();
    for (const auto& e : envelope) env.push_back({{"theta", e.theta}, {"y_min", e.y_min}, {"h", e.entropy}});
    j["envelope"] = env;
    return dump(j);
  }
  std::ostringstream out;
  out << points.size() << " pole/zero points within radius " << real(ctx, radius) << "\n"
      << envelope.size() << " nonempty bins of " << bins << "; max |-log y_min - h(sin, cos)| = "
      << format_real(worst, 4) << "\n";
  return out.str();
}

std::string zeta_nonexpansive(const Context& ctx, const std::string& name) {
  const auto f = resolve_format(ctx, "text", {"text", "json"});
  const ActionSpec spec = load_action(name);
  const auto normals = nonexpansive_directions(scaled_list(ctx, spec));
  if (f == "json") {
    Json j = document();
    j["action"] = spec.name;
    Json ns = Json::array();
    for (const auto& n : normals) ns.push_back(vector_json(n));
    j["normals"] = ns;
    return dump(j);
  }
  static const char* names[] = {"x", "y", "z"};
  std::ostringstream out;
  for (const auto& n : normals) {
    std::string lhs;
    for (std::size_t k = 0; k < n.size() && k < 3; ++k) {
      if (n[k] == 0.0) continue;
      lhs += (lhs.empty() ? "" : " + ") + real(ctx, n[k]) + "*" + names[k];
    }
    out << lhs << " = 0\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// sync

std::string sync_pair(const Context& ctx, const std::string& name, const std::string& alpha,
                      const std::string& beta, unsigned long n) {
  const auto f = resolve_format(ctx, "text", {"text", "json"});
  const ActionSpec spec = load_action(name);
  const BigRational a = parse_rational(alpha), b = parse_rational(beta);
  const SyncFamily family = make_sync_family(spec, {a, b});
  const BigInt count = weak_sync_count(family, a, b, n);
  if (f == "json") {
    Json j = document();
    j["alpha"] = to_string(a);
    j["beta"] = to_string(b);
    j["n"] = n;
    j["count"] = count.get_str();
    return dump(j);
  }
  return count.get_str() + "\n";
}

std::string sync_strong(const Context& ctx, unsigned long n) {
  const auto f = resolve_format(ctx, "text", {"text", "json"});
  const BigInt count = strong_sync_count_123(n);
  if (f == "json") {
    Json j = document();
    j["family"] = "x1,x2,x3";
    j["n"] = n;
    j["count"] = count.get_str();
    return dump(j);
  }
  return count.get_str() + "\n";
}

std::string sync_rate(const Context& ctx, const std::string& name, const std::string& maps_text) {
  const auto f = resolve_format(ctx, "text", {"text", "json"});
  const ActionSpec spec = load_action(name);
  SyncFamily family;
  if (maps_text.empty()) {
    family = default_sync_family(spec);
  } else {
    std::vector<BigRational> maps;
    for (const auto& part : split(maps_text, ',')) maps.push_back(parse_rational(part));
    family = make_sync_family(spec, std::move(maps));
  }
  const double rate = sync_growth_rate(family);
  if (f == "json") {
    Json j = document();
    Json ms = Json::array();
    for (const auto& m : family.maps) ms.push_back(to_string(m));
    j["maps"] = ms;
    j["rate"] = rate;
    return dump(j);
  }
  return real(ctx, rate) + "\n";
}

std::string sync_trace(const Context& ctx, const std::string& name, unsigned long n_max) {
  const auto f = resolve_format(ctx, "text", {"text", "json", "csv"});
  const auto trace = rstar_trace(default_sync_family(load_action(name)), n_max);
  if (f == "json") {
    Json j = document();
    Json rows = Json::array();
    for (const auto& e : trace) {
      rows.push_back({{"n", e.n}, {"count", e.count.get_str()}, {"root", e.root},
                      {"tail_max", e.tail_max}, {"trivial", e.trivial}});
    }
    j["trace"] = rows;
    return dump(j);
  }
  std::ostringstream out;
  out << "n,count,root,tail_max,trivial\n";
  for (const auto& e : trace) {
    out << e.n << "," << e.count.get_str() << "," << real(ctx, e.root) << "," << real(ctx, e.tail_max) << ","
        << (e.trivial ? "yes" : "no") << "\n";
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"zdyn: entropy, periodic points and zeta functions of algebraic Z^d-actions"};
  app.name("zdyn");
  app.fallthrough();
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--format", ctx.format, "text, json, csv or svg (default depends on the command)")
      ->check(CLI::IsMember({"auto", "text", "json", "csv", "svg"}));
  app.add_option("--out", ctx.out_path, "write to this file instead of standard output");
  app.add_option("--precision", ctx.precision, "significant digits for reals")->check(CLI::Range(1, 17));
  app.add_flag("--bits", ctx.bits, "entropies in bits (log base 2) instead of nats");
  app.add_option("--workers", ctx.workers, "threads for lattice scans (0: all cores)");

  std::string action_name;
  std::string t_text, pairs_text, n_text, n1_text = "-5..5", n2_text = "0..5";
  std::string logN_text = "10,20,40", maps_text, alpha = "2", beta = "3";
  double delta = 0.9, radius = 0.0, omega_radius = 50.0;
  bool expansive_only = false;
  unsigned K = 8;
  long max_norm = 6;
  std::size_t bins = 720;
  unsigned long sync_n = 1, n_max = 20;
  std::function<std::string()> handler;

  auto add_action = [&](CLI::App* sub, bool required = true, const std::string& fallback = "") {
    auto* opt = sub->add_option("action", action_name, "catalog name or action file");
    if (required) {
      opt->required();
    } else {
      action_name = fallback;
    }
  };

  auto* action = app.add_subcommand("action", "inspect actions")->require_subcommand(1);
  auto* a_list = action->add_subcommand("list", "catalog names");
  a_list->callback([&] { handler = [&] { return action_list(ctx); }; });
  auto* a_show = action->add_subcommand("show", "spec and Lyapunov list");
  add_action(a_show);
  a_show->callback([&] { handler = [&] { return action_show(ctx, action_name); }; });
  auto* a_validate = action->add_subcommand("validate", "check an action file");
  add_action(a_validate);
  a_validate->callback([&] { handler = [&] { return action_validate(ctx, action_name); }; });

  auto* entropy = app.add_subcommand("entropy", "directional entropy geometry")->require_subcommand(1);
  auto* e_eval = entropy->add_subcommand("eval", "h(t)");
  add_action(e_eval);
  e_eval->add_option("--t", t_text, "direction, comma separated")->required();
  e_eval->callback([&] { handler = [&] { return entropy_eval(ctx, action_name, t_text); }; });
  auto* e_ball = entropy->add_subcommand("ball", "unit ball polytope");
  add_action(e_ball);
  e_ball->callback([&] { handler = [&] { return entropy_ball(ctx, action_name); }; });
  auto* e_fried = entropy->add_subcommand("fried", "Fried average entropy");
  add_action(e_fried);
  e_fried->callback([&] { handler = [&] { return entropy_fried(ctx, action_name); }; });
  auto* e_bounds = entropy->add_subcommand("bounds", "min and max of h on the unit sphere");
  add_action(e_bounds);
  e_bounds->callback([&] { handler = [&] { return entropy_bounds_cmd(ctx, action_name); }; });
  auto* e_rel = entropy->add_subcommand("relational", "relational entropy of Lyapunov pairs");
  e_rel->add_option("--pairs", pairs_text, "s:t,s:t,... (numbers or logK)");
  e_rel->callback([&] { handler = [&] { return entropy_relational(ctx, pairs_text); }; });

  auto* fix = app.add_subcommand("fix", "periodic point counts")->require_subcommand(1);
  auto* f_count = fix->add_subcommand("count", "|Fix(alpha^n)|");
  add_action(f_count);
  f_count->add_option("--n", n_text, "lattice point, comma separated")->required();
  f_count->callback([&] { handler = [&] { return fix_count_cmd(ctx, action_name, n_text); }; });
  auto* f_grid = fix->add_subcommand("grid", "counts over a box (d = 2)");
  add_action(f_grid);
  f_grid->add_option("--n1", n1_text, "range lo..hi")->capture_default_str();
  f_grid->add_option("--n2", n2_text, "range lo..hi")->capture_default_str();
  f_grid->callback([&] { handler = [&] { return fix_grid_cmd(ctx, action_name, n1_text, n2_text); }; });

  auto* hull = app.add_subcommand("hull", "convex hull growth experiment")->require_subcommand(1);
  auto* h_run = hull->add_subcommand("run", "hull of {n : |Fix(alpha^n)| <= N}");
  add_action(h_run);
  h_run->add_option("--logN", logN_text, "comma separated values of log N")->capture_default_str();
  h_run->add_option("--delta", delta, "bracket exponent in (0, 1)")->capture_default_str();
  h_run->add_option("--radius", radius, "scan radius override");
  h_run->add_flag("--expansive-only", expansive_only, "drop non-expansive lattice points");
  h_run->callback([&] {
    handler = [&] { return hull_run(ctx, action_name, logN_text, delta, expansive_only, radius); };
  });

  auto* zeta = app.add_subcommand("zeta", "directional zeta functions")->require_subcommand(1);
  auto* z_show = zeta->add_subcommand("show", "closed form or series at n");
  add_action(z_show);
  z_show->add_option("--n", n_text, "lattice point")->required();
  z_show->add_option("--K", K, "series order")->capture_default_str();
  z_show->callback([&] { handler = [&] { return zeta_show(ctx, action_name, n_text, K); }; });
  auto* z_check = zeta->add_subcommand("check", "closed forms against counts");
  add_action(z_check, false, "times2_times3");
  z_check->add_option("--n", n_text, "single lattice point (default: all expansive n in a box)");
  z_check->add_option("--K", K, "terms")->capture_default_str();
  z_check->add_option("--max", max_norm, "box half-width")->capture_default_str();
  z_check->callback([&] { handler = [&] { return zeta_check(ctx, action_name, n_text, K, max_norm); }; });
  auto* z_omega = zeta->add_subcommand("omega", "pole and zero scatter of times2_times3");
  z_omega->add_option("--radius", omega_radius, "lattice radius")->capture_default_str();
  z_omega->add_option("--bins", bins, "angular bins for the envelope")->capture_default_str();
  z_omega->callback([&] { handler = [&] { return zeta_omega(ctx, omega_radius, bins); }; });
  auto* z_nonexp = zeta->add_subcommand("nonexpansive", "lines l-perp of the Lyapunov list");
  add_action(z_nonexp);
  z_nonexp->callback([&] { handler = [&] { return zeta_nonexpansive(ctx, action_name); }; });

  auto* sync = app.add_subcommand("sync", "synchronization points")->require_subcommand(1);
  auto* s_pair = sync->add_subcommand("pair", "|S_n(alpha, beta)|");
  add_action(s_pair, false, "times2_times3");
  s_pair->add_option("--alpha", alpha, "first multiplier")->capture_default_str();
  s_pair->add_option("--beta", beta, "second multiplier")->capture_default_str();
  s_pair->add_option("--n", sync_n, "time")->required();
  s_pair->callback([&] { handler = [&] { return sync_pair(ctx, action_name, alpha, beta, sync_n); }; });
  auto* s_strong = sync->add_subcommand("strong", "gcd(2^n - 1, 3^n - 1)");
  s_strong->add_option("--n", sync_n, "time")->required();
  s_strong->callback([&] { handler = [&] { return sync_strong(ctx, sync_n); }; });
  auto* s_rate = sync->add_subcommand("rate", "growth rate r of weak counts");
  add_action(s_rate, false, "times2_times3");
  s_rate->add_option("--maps", maps_text, "multipliers, comma separated");
  s_rate->callback([&] { handler = [&] { return sync_rate(ctx, action_name, maps_text); }; });
  auto* s_trace = sync->add_subcommand("trace", "strong counts and n-th roots for {x1, x2, x3}");
  add_action(s_trace, false, "sync_1_2_3");
  s_trace->add_option("--nmax", n_max, "last n")->capture_default_str();
  s_trace->callback([&] { handler = [&] { return sync_trace(ctx, action_name, n_max); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    const std::string payload = handler();
    if (ctx.out_path.empty()) {
      out << payload;
    } else {
      std::ofstream file(ctx.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write " + ctx.out_path);
      file << payload;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  }
}

}  // namespace zdyn::cli
