#include "zdyn/periodic.hpp"

#include <mpfr.h>

#include <cmath>
#include <numbers>

#include "parallel.hpp"
#include "zdyn/entropy.hpp"
#include "zdyn/error.hpp"

namespace zdyn {
namespace {

std::string point_string(const LatticePoint& n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

std::optional<BigInt> rational_count(const PrimeComponent& c, const LatticePoint& n) {
  const auto& gens = std::get<std::vector<BigRational>>(c.generators);
  BigRational u = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (n[i]) u *= pow(gens[i], n[i]);
  }
  const BigRational x = u - 1;
  if (x == 0) return std::nullopt;
  BigRational product = 1;
  for (const Place& place : c.places) {
    const bool unbounded = place_is_unbounded(c, place);
    if (const auto* p = std::get_if<RationalPrime>(&place)) {
      const long v = padic_valuation(x, p->p);
      const long e = unbounded ? -v : v;  // |x|_p = p^-v
      const BigInt pe = ipow(BigInt(static_cast<unsigned long>(p->p)), static_cast<unsigned long>(std::labs(e)));
      if (e > 0) {
        product *= pe;
      } else if (e < 0) {
        product /= pe;
      }
    } else {
      product *= unbounded ? abs(x) : BigRational(1 / abs(x));
    }
  }
  if (product.get_den() != 1) {
    throw Error(ErrorKind::ValidationError,
                "place product " + to_string(product) + " is not an integer at n = " + point_string(n) +
                    "; the place list is incomplete");
  }
  return product.get_num();
}

std::optional<BigInt> f2_count(const PrimeComponent& c, const LatticePoint& n) {
  const auto& gens = std::get<std::vector<F2Laurent>>(c.generators);
  F2Laurent num = F2Laurent::one();
  F2Laurent den = F2Laurent::one();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (n[i] > 0) num *= gens[i].pow(static_cast<unsigned long>(n[i]));
    if (n[i] < 0) den *= gens[i].pow(static_cast<unsigned long>(-n[i]));
  }
  if (num == den) return std::nullopt;
  const F2Laurent top = num + den;  // u^n - 1 = (num - den) / den
  long exponent = 0;
  for (const Place& place : c.places) {
    const F2Place v = std::get<F2FunctionPlace>(place).variant;
    const long e = f2_place_exponent(top, v) - f2_place_exponent(den, v);
    exponent += place_is_unbounded(c, place) ? e : -e;
  }
  if (exponent < 0) {
    throw Error(ErrorKind::ValidationError,
                "negative 2-exponent at n = " + point_string(n) + "; the place list is incomplete");
  }
  return ipow(BigInt(2), static_cast<unsigned long>(exponent));
}

std::optional<BigInt> matrix_count(const PrimeComponent& c, const LatticePoint& n) {
  const auto& gens = std::get<std::vector<IntMatrix>>(c.generators);
  IntMatrix a = IntMatrix::identity(gens.front().dimension());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (n[i]) a = a * int_matrix_pow(gens[i], n[i]);
  }
  const BigInt det = int_matrix_det(a - IntMatrix::identity(a.dimension()));
  if (det == 0) return std::nullopt;
  return BigInt(abs(det));
}

bool is_zero_point(const LatticePoint& n) {
  return std::all_of(n.begin(), n.end(), [](long x) { return x == 0; });
}

Vector as_vector(const LatticePoint& n) { return Vector(n.begin(), n.end()); }

double euclidean(const LatticePoint& n) {
  double s = 0.0;
  for (long x : n) s += static_cast<double>(x) * static_cast<double>(x);
  return std::sqrt(s);
}

double log_count(const BigInt& count) { return count == 1 ? 0.0 : log_abs(count); }

void append_ball(std::size_t d, long r2, LatticePoint& prefix, long used, std::vector<LatticePoint>& out) {
  if (prefix.size() == d) {
    if (!is_zero_point(prefix)) out.push_back(prefix);
    return;
  }
  const long budget = r2 - used;
  long m = static_cast<long>(std::sqrt(static_cast<double>(budget)));
  while (m * m > budget) --m;
  while ((m + 1) * (m + 1) <= budget) ++m;
  for (long x = -m; x <= m; ++x) {
    prefix.push_back(x);
    append_ball(d, r2, prefix, used + x * x, out);
    prefix.pop_back();
  }
}

struct ScanResult {
  std::vector<LatticePoint> points;
  std::vector<FixCount> counts;
  std::vector<double> entropies;
};

ScanResult scan(const ActionSpec& spec, double radius, bool expansive_only, unsigned workers) {
  ScanResult r;
  r.points = lattice_ball(spec.d, radius);
  if (expansive_only) r.points = restrict_expansive(spec, r.points);
  const LyapunovList list = lyapunov_list(spec);
  r.counts = detail::parallel_map<FixCount>(r.points.size(), workers,
                                            [&](std::size_t i) { return fix_count(spec, r.points[i]); });
  r.entropies.reserve(r.points.size());
  for (const auto& n : r.points) r.entropies.push_back(directional_entropy(list, as_vector(n)));
  return r;
}

}  // namespace

std::string FixCount::to_string() const { return infinite ? "∞" : value.get_str(); }

FixCount fix_count(const ActionSpec& spec, const LatticePoint& n) {
  if (n.size() != spec.d) {
    throw Error(ErrorKind::InvalidArgument, "expected a point in Z^" + std::to_string(spec.d));
  }
  if (is_zero_point(n)) throw Error(ErrorKind::ZeroExponent, "alpha^0 is the identity; n must be nonzero");
  BigInt total = 1;
  for (const auto& c : spec.components) {
    std::optional<BigInt> count;
    switch (c.kind()) {
      case FieldKind::RationalSInteger: count = rational_count(c, n); break;
      case FieldKind::F2FunctionField: count = f2_count(c, n); break;
      case FieldKind::NumberFieldMatrices: count = matrix_count(c, n); break;
    }
    if (!count) return FixCount::infinity();
    total *= ipow(*count, static_cast<unsigned long>(c.multiplicity));
  }
  return {false, total};
}

const FixCount& FixGrid::at(long n1, long n2) const {
  if (n1 < n1_lo || n1 > n1_hi || n2 < n2_lo || n2 > n2_hi) {
    throw Error(ErrorKind::InvalidArgument, "grid index out of range");
  }
  return rows[static_cast<std::size_t>(n2_hi - n2)][static_cast<std::size_t>(n1 - n1_lo)];
}

FixGrid fix_grid(const ActionSpec& spec, long n1_lo, long n1_hi, long n2_lo, long n2_hi) {
  if (spec.d != 2) throw Error(ErrorKind::DimensionUnsupported, "fix grids need d = 2");
  if (n1_lo > n1_hi || n2_lo > n2_hi) throw Error(ErrorKind::InvalidArgument, "empty grid range");
  FixGrid g{n1_lo, n1_hi, n2_lo, n2_hi, {}};
  for (long n2 = n2_hi; n2 >= n2_lo; --n2) {
    std::vector<FixCount> row;
    for (long n1 = n1_lo; n1 <= n1_hi; ++n1) {
      row.push_back(n1 == 0 && n2 == 0 ? FixCount::infinity() : fix_count(spec, {n1, n2}));
    }
    g.rows.push_back(std::move(row));
  }
  return g;
}

double g_factor(const ActionSpec& spec, const LatticePoint& n) {
  const FixCount count = fix_count(spec, n);
  if (count.infinite) {
    throw Error(ErrorKind::InfiniteCount, "|Fix| is infinite at n = " + point_string(n));
  }
  const double h = directional_entropy(lyapunov_list(spec), as_vector(n));
  return std::exp(log_count(count.value) - h);
}

int g_bound_exponent(const ActionSpec& spec) {
  int d = 0;
  for (const auto& c : spec.components) {
    if (c.allow_bounded_places) {
      throw Error(ErrorKind::InvalidArgument, "g(n) is unbounded on components with bounded places");
    }
    int archimedean = 0;
    for (const auto& place : c.places) archimedean += std::holds_alternative<Embedding>(place);
    d += c.multiplicity * std::max(1, archimedean);
  }
  return d;
}

bool is_expansive(const ActionSpec& spec, const LatticePoint& n) {
  if (is_zero_point(n)) return false;
  for (const auto& c : spec.components) {
    for (std::size_t p = 0; p < c.places.size(); ++p) {
      if (place_log(c, p, n).exactly_zero) return false;
    }
  }
  return true;
}

std::vector<LatticePoint> restrict_expansive(const ActionSpec& spec,
                                             const std::vector<LatticePoint>& points) {
  std::vector<LatticePoint> out;
  for (const auto& n : points) {
    if (is_expansive(spec, n)) out.push_back(n);
  }
  return out;
}

bool count_within(const BigInt& count, double logN) {
  const double slack = 1e-15 * std::max(1.0, std::fabs(logN));  // logN itself is rounded
  const double lc = log_count(count);
  if (lc < logN - 1e-9) return true;
  if (lc > logN + 1e-9) return false;
  mpfr_t value, bound;
  mpfr_inits2(256, value, bound, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_z(value, count.get_mpz_t(), MPFR_RNDN);
  mpfr_log(value, value, MPFR_RNDN);
  mpfr_set_d(bound, logN, MPFR_RNDN);
  mpfr_add_d(bound, bound, slack, MPFR_RNDN);
  const bool within = mpfr_cmp(value, bound) <= 0;
  mpfr_clears(value, bound, static_cast<mpfr_ptr>(nullptr));
  return within;
}

std::vector<LatticePoint> lattice_ball(std::size_t d, double radius) {
  std::vector<LatticePoint> out;
  if (radius < 1.0 || d == 0) return out;
  const auto r2 = static_cast<long>(std::floor(radius * radius + 1e-9));
  LatticePoint prefix;
  append_ball(d, r2, prefix, 0, out);
  return out;
}

double hull_scan_radius(const ActionSpec& spec, double logN, double delta) {
  if (!(logN > 0)) throw Error(ErrorKind::InvalidArgument, "logN must be positive");
  if (!(delta > 0 && delta < 1)) throw Error(ErrorKind::InvalidArgument, "delta must lie in (0, 1)");
  const EntropyBounds b = entropy_bounds(lyapunov_list(spec));
  return (logN + std::pow(logN, delta) + 5.0) / b.c1;
}

HullRecord hull_experiment(const ActionSpec& spec, double logN, double delta, const ScanOptions& options) {
  HullRecord rec;
  rec.logN = logN;
  rec.delta = delta;
  rec.scan_radius = options.radius ? *options.radius : hull_scan_radius(spec, logN, delta);
  const double outer = logN + std::pow(logN, delta);
  const double inner = logN - g_bound_exponent(spec) * std::numbers::ln2;

  const ScanResult s = scan(spec, rec.scan_radius, options.expansive_only, options.workers);
  std::vector<LatticePoint> qualifying;
  const LatticePoint* escaped = nullptr;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const bool q = !s.counts[i].infinite && count_within(s.counts[i].value, logN);
    if (q) {
      qualifying.push_back(s.points[i]);
      if (s.entropies[i] > outer) {
        ++rec.outer_bracket_violations;
        if (!escaped) escaped = &s.points[i];
      }
    } else if (s.entropies[i] <= inner) {
      ++rec.inner_bracket_exceptions;
    }
  }
  if (escaped && !options.radius) {
    throw Error(ErrorKind::InfiniteHull,
                "n = " + point_string(*escaped) + " has |Fix| <= N but h(n) beyond logN + logN^delta; " +
                    std::to_string(rec.outer_bracket_violations) +
                    " such points in the scan ball, so H(N) is not bounded by the entropy ball");
  }
  rec.qualifying = qualifying.size();
  LatticeHull hull = lattice_convex_hull(spec.d, std::move(qualifying));
  rec.hull_vertices = std::move(hull.vertices);
  rec.volume = hull.volume.get_d();
  rec.ratio = rec.volume / std::pow(logN, static_cast<double>(spec.d));
  rec.unit_ball_volume = polytope_volume(unit_ball(lyapunov_list(spec)));
  rec.ratio_over_unit_ball = rec.ratio / rec.unit_ball_volume;
  return rec;
}

std::vector<HullRecord> hull_experiment(const ActionSpec& spec, const std::vector<double>& logNs,
                                        double delta, const ScanOptions& options) {
  std::vector<HullRecord> out;
  for (double logN : logNs) out.push_back(hull_experiment(spec, logN, delta, options));
  return out;
}

std::vector<LatticePoint> hull_points(const ActionSpec& spec, double logN, double delta,
                                      const ScanOptions& options) {
  const double radius = options.radius ? *options.radius : hull_scan_radius(spec, logN, delta);
  const double outer = logN + std::pow(logN, delta);
  const ScanResult s = scan(spec, radius, options.expansive_only, options.workers);
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    if (s.counts[i].infinite || !count_within(s.counts[i].value, logN)) continue;
    if (s.entropies[i] > outer && !options.radius) {
      throw Error(ErrorKind::InfiniteHull,
                  "n = " + point_string(s.points[i]) +
                      " has |Fix| <= N but h(n) beyond logN + logN^delta; H(N) is unbounded");
    }
    out.push_back(s.points[i]);
  }
  return out;
}

GrowthWindow growth_rate_window(const ActionSpec& spec, double r_lo, double r_hi, unsigned workers) {
  if (!(r_lo >= 0 && r_hi >= r_lo)) throw Error(ErrorKind::InvalidArgument, "bad radius range");
  std::vector<LatticePoint> points;
  for (auto& n : lattice_ball(spec.d, r_hi)) {
    if (euclidean(n) >= r_lo) points.push_back(std::move(n));
  }
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "no lattice points in the annulus");
  const auto counts = detail::parallel_map<FixCount>(points.size(), workers,
                                                     [&](std::size_t i) { return fix_count(spec, points[i]); });
  GrowthWindow w;
  w.points = points.size();
  w.min = INFINITY;
  w.max = -INFINITY;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (counts[i].infinite) {
      throw Error(ErrorKind::InfiniteCount, "|Fix| is infinite at n = " + point_string(points[i]));
    }
    const double rate = log_count(counts[i].value) / euclidean(points[i]);
    if (rate < w.min) {
      w.min = rate;
      w.argmin = points[i];
    }
    if (rate > w.max) {
      w.max = rate;
      w.argmax = points[i];
    }
  }
  return w;
}

}  // namespace zdyn
