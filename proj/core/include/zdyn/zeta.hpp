#pragma once

#include <string>
#include <vector>

#include "zdyn/actions.hpp"
#include "zdyn/periodic.hpp"

namespace zdyn {

/// prod (1 - c z) over the numerator coefficients divided by the same over the
/// denominator coefficients.
struct RationalZeta {
  std::vector<BigInt> numerator;
  std::vector<BigInt> denominator;

  std::string to_string() const;  // "(1-z)/(1-6z)"
  bool operator==(const RationalZeta&) const = default;
};

/// Closed form for the x2x3 action at an expansive n = (n1, n2), with
/// A = 2^|n1|, B = 3^|n2|: (1-z)/(1-ABz) when n1 n2 > 0, otherwise
/// (1-min(A,B) z)/(1-max(A,B) z). The comparison of A and B is exact.
/// Throws NotExpansive on the axes.
RationalZeta directional_zeta_x2x3(const LatticePoint& n);

/// Same, after checking that `spec` is the x2x3 action (UnsupportedFamily otherwise).
RationalZeta directional_zeta(const ActionSpec& spec, const LatticePoint& n);
bool is_times2_times3(const ActionSpec& spec);

/// Do the first K coefficients of log zeta match sum_k |Fix(alpha^{kn})| z^k / k?
/// Exact: compares sum_den c^k - sum_num c^k with the count for k = 1..K.
bool zeta_series_check(const ActionSpec& spec, const LatticePoint& n, const RationalZeta& zeta,
                       unsigned K);

/// exp(sum_k a_k z^k / k) to order K from the counts a_k = |Fix(alpha^{kn})|.
struct ZetaSeries {
  std::vector<BigInt> counts;             // a_1..a_K
  std::vector<BigRational> coefficients;  // b_0..b_K
};
ZetaSeries zeta_series(const ActionSpec& spec, const LatticePoint& n, unsigned K);

/// theta with n / ||n|| = (sin theta, cos theta), in [0, 2 pi).
double direction_angle(const LatticePoint& n);

struct OmegaPoint {
  double theta = 0.0;
  double y = 0.0;  // |z|^{1/||n||}
  LatticePoint n;
  bool pole = false;
};

/// Pole and zero data of the x2x3 closed forms over every expansive n with
/// ||n|| <= radius.
std::vector<OmegaPoint> omega_set(double radius);

/// Minimum y per angular bin, next to h at the bin centre (the envelope
/// should satisfy -log y = h(sin theta, cos theta)). Empty bins are skipped.
struct EnvelopeSample {
  double theta = 0.0;
  double y_min = 0.0;
  double entropy = 0.0;
};
std::vector<EnvelopeSample> omega_lower_envelope(const LyapunovList& list,
                                                 const std::vector<OmegaPoint>& points,
                                                 std::size_t bins);

/// One normal per distinct line l-perp (deduplicated up to sign), zero
/// vectors skipped.
std::vector<Vector> nonexpansive_directions(const LyapunovList& list);

}  // namespace zdyn
