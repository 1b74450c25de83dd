#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zdyn/actions.hpp"
#include "zdyn/hull.hpp"
#include "zdyn/rational.hpp"

namespace zdyn {

/// |Fix(alpha^n)|: a positive integer, or infinite when u^n = 1 on some component.
struct FixCount {
  bool infinite = false;
  BigInt value = 0;

  static FixCount infinity() { return {true, 0}; }
  std::string to_string() const;  // "∞" when infinite
  bool operator==(const FixCount&) const = default;
};

/// Exact product over places of |u^n - 1|_v^m. Throws ZeroExponent for n = 0.
FixCount fix_count(const ActionSpec& spec, const LatticePoint& n);

/// Rows run from n2 = hi down to lo, columns n1 = lo..hi (d = 2 only).
struct FixGrid {
  long n1_lo = 0, n1_hi = 0, n2_lo = 0, n2_hi = 0;
  std::vector<std::vector<FixCount>> rows;
  const FixCount& at(long n1, long n2) const;
};
FixGrid fix_grid(const ActionSpec& spec, long n1_lo, long n1_hi, long n2_lo, long n2_hi);

/// g(n) = |Fix(alpha^n)| e^{-h(n)}. Throws InfiniteCount.
double g_factor(const ActionSpec& spec, const LatticePoint& n);

/// D with 0 < g(n) < 2^D: each archimedean place contributes at most a factor
/// 2 and ultrametric places at most 1, so D = sum over components of
/// m * max(1, #archimedean places). Components with bounded places are not
/// covered (g is unbounded there) and raise InvalidArgument.
int g_bound_exponent(const ActionSpec& spec);

/// Does alpha^n act expansively? Decided exactly per component: no place with
/// |u^n|_v = 1 (and u^n != 1).
bool is_expansive(const ActionSpec& spec, const LatticePoint& n);
std::vector<LatticePoint> restrict_expansive(const ActionSpec& spec,
                                             const std::vector<LatticePoint>& points);

/// count <= e^logN, re-checked at 256 bits when the double comparison is close.
bool count_within(const BigInt& count, double logN);

struct ScanOptions {
  bool expansive_only = false;
  unsigned workers = 0;  // 0: hardware concurrency
  // overrides the default scan radius; an explicit radius is a plain enumeration, so
  // qualifying points past the outer bracket are counted but do not raise InfiniteHull
  std::optional<double> radius;
};

/// Default Euclidean scan radius (logN + logN^delta + 5) / C1.
double hull_scan_radius(const ActionSpec& spec, double logN, double delta);

/// All n != 0 in the scan ball with finite |Fix(alpha^n)| <= N. Throws
/// InfiniteHull when some qualifying n has h(n) > logN + logN^delta, beyond
/// the outer bracket, which happens when the qualifying set is unbounded.
std::vector<LatticePoint> hull_points(const ActionSpec& spec, double logN, double delta,
                                      const ScanOptions& options = {});

struct HullRecord {
  double logN = 0.0;
  double delta = 0.0;
  double scan_radius = 0.0;
  std::size_t qualifying = 0;
  std::vector<LatticePoint> hull_vertices;
  double volume = 0.0;
  double ratio = 0.0;  // volume / logN^d
  double unit_ball_volume = 0.0;
  double ratio_over_unit_ball = 0.0;
  /// Lattice n with h(n) <= logN - D log 2 whose count exceeds N (expected 0).
  std::size_t inner_bracket_exceptions = 0;
  /// Qualifying n with h(n) > logN + logN^delta (nonzero only when not raised).
  std::size_t outer_bracket_violations = 0;
};

HullRecord hull_experiment(const ActionSpec& spec, double logN, double delta,
                           const ScanOptions& options = {});
std::vector<HullRecord> hull_experiment(const ActionSpec& spec, const std::vector<double>& logNs,
                                        double delta, const ScanOptions& options = {});

/// Extremes of log|Fix(alpha^n)| / ||n|| over r_lo <= ||n|| <= r_hi.
struct GrowthWindow {
  double min = 0.0;
  double max = 0.0;
  LatticePoint argmin;
  LatticePoint argmax;
  std::size_t points = 0;
};
GrowthWindow growth_rate_window(const ActionSpec& spec, double r_lo, double r_hi,
                                unsigned workers = 0);

/// Every lattice point with ||n|| <= radius (Euclidean), origin excluded.
std::vector<LatticePoint> lattice_ball(std::size_t d, double radius);

}  // namespace zdyn
