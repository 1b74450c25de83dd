#include "zdyn/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zdyn/entropy.hpp"
#include "zdyn/error.hpp"

namespace zdyn {
namespace {

BigInt ipow(unsigned long base, unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

std::string factors(const std::vector<BigInt>& cs) {
  std::string out;
  for (const auto& c : cs) {
    out += "(1-";
    if (c != 1) out += c.get_str();
    out += "z)";
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::string RationalZeta::to_string() const {
  return factors(numerator) + "/" + factors(denominator);
}

bool is_times2_times3(const ActionSpec& spec) {
  if (spec.d != 2 || spec.components.size() != 1) return false;
  const PrimeComponent& c = spec.components.front();
  if (c.kind() != FieldKind::RationalSInteger || c.multiplicity != 1 || c.allow_bounded_places) return false;
  const auto& gens = std::get<std::vector<BigRational>>(c.generators);
  return gens[0] == 2 && gens[1] == 3 && c.places.size() == 3;
}

RationalZeta directional_zeta_x2x3(const LatticePoint& n) {
  if (n.size() != 2) throw Error(ErrorKind::InvalidArgument, "expected n in Z^2");
  if (n[0] == 0 || n[1] == 0) {
    throw Error(ErrorKind::NotExpansive, "n = (" + std::to_string(n[0]) + "," + std::to_string(n[1]) +
                                             ") lies on an axis, a non-expansive direction");
  }
  const BigInt a = ipow(2, static_cast<unsigned long>(std::labs(n[0])));
  const BigInt b = ipow(3, static_cast<unsigned long>(std::labs(n[1])));
  if ((n[0] > 0) == (n[1] > 0)) return {{BigInt(1)}, {BigInt(a * b)}};
  // |Fix| = |A - B|; A = B would put n on the line x log 2 + y log 3 = 0
  return a < b ? RationalZeta{{a}, {b}} : RationalZeta{{b}, {a}};
}

RationalZeta directional_zeta(const ActionSpec& spec, const LatticePoint& n) {
  if (!is_times2_times3(spec)) {
    throw Error(ErrorKind::UnsupportedFamily,
                "closed-form zeta functions exist only for times2_times3; use the series report");
  }
  return directional_zeta_x2x3(n);
}

bool zeta_series_check(const ActionSpec& spec, const LatticePoint& n, const RationalZeta& zeta,
                       unsigned K) {
  for (unsigned k = 1; k <= K; ++k) {
    LatticePoint kn = n;
    for (long& x : kn) x *= static_cast<long>(k);
    const FixCount count = fix_count(spec, kn);
    if (count.infinite) {
      throw Error(ErrorKind::InfiniteCount, "|Fix| is infinite at " + std::to_string(k) + "n");
    }
    BigInt predicted = 0;
    BigInt power;
    for (const auto& c : zeta.denominator) {
      mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), k);
      predicted += power;
    }
    for (const auto& c : zeta.numerator) {
      mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), k);
      predicted -= power;
    }
    if (predicted != count.value) return false;
  }
  return true;
}

ZetaSeries zeta_series(const ActionSpec& spec, const LatticePoint& n, unsigned K) {
  ZetaSeries s;
  for (unsigned k = 1; k <= K; ++k) {
    LatticePoint kn = n;
    for (long& x : kn) x *= static_cast<long>(k);
    const FixCount count = fix_count(spec, kn);
    if (count.infinite) {
      throw Error(ErrorKind::InfiniteCount, "|Fix| is infinite at " + std::to_string(k) + "n");
    }
    s.counts.push_back(count.value);
  }
  // k b_k = sum_{j=1..k} a_j b_{k-j}
  s.coefficients.push_back(1);
  for (unsigned k = 1; k <= K; ++k) {
    BigRational sum = 0;
    for (unsigned j = 1; j <= k; ++j) sum += BigRational(s.counts[j - 1]) * s.coefficients[k - j];
    sum /= k;
    s.coefficients.push_back(sum);
  }
  return s;
}

double direction_angle(const LatticePoint& n) {
  double theta = std::atan2(static_cast<double>(n.at(0)), static_cast<double>(n.at(1)));
  if (theta < 0) theta += 2 * std::numbers::pi;
  return theta;
}

std::vector<OmegaPoint> omega_set(double radius) {
  std::vector<OmegaPoint> out;
  for (const auto& n : lattice_ball(2, radius)) {
    if (n[0] == 0 || n[1] == 0) continue;
    const RationalZeta zeta = directional_zeta_x2x3(n);
    const double length = std::hypot(static_cast<double>(n[0]), static_cast<double>(n[1]));
    const double theta = direction_angle(n);
    auto emit = [&](const BigInt& c, bool pole) {
      // root 1/c, so y = c^{-1/||n||}
      const double y = c == 1 ? 1.0 : std::exp(-log_abs(c) / length);
      out.push_back({theta, y, n, pole});
    };
    for (const auto& c : zeta.numerator) emit(c, false);
    for (const auto& c : zeta.denominator) emit(c, true);
  }
  return out;
}

std::vector<EnvelopeSample> omega_lower_envelope(const LyapunovList& list,
                                                 const std::vector<OmegaPoint>& points,
                                                 std::size_t bins) {
  if (bins == 0) throw Error(ErrorKind::InvalidArgument, "need at least one bin");
  const double width = 2 * std::numbers::pi / static_cast<double>(bins);
  std::vector<double> lowest(bins, INFINITY);
  for (const auto& p : points) {
    auto b = static_cast<std::size_t>(p.theta / width);
    if (b >= bins) b = bins - 1;
    lowest[b] = std::min(lowest[b], p.y);
  }
  std::vector<EnvelopeSample> out;
  for (std::size_t b = 0; b < bins; ++b) {
    if (std::isinf(lowest[b])) continue;
    const double theta = (static_cast<double>(b) + 0.5) * width;
    out.push_back({theta, lowest[b], directional_entropy(list, {std::sin(theta), std::cos(theta)})});
  }
  return out;
}

std::vector<Vector> nonexpansive_directions(const LyapunovList& list) {
  std::vector<Vector> out;
  for (const auto& e : list.entries) {
    const double len = norm(e.vector);
    if (len == 0.0) continue;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Vector& kept) {
      const double cosine = dot(kept, e.vector) / (norm(kept) * len);
      return std::fabs(std::fabs(cosine) - 1.0) < 1e-12;
    });
    if (!seen) out.push_back(e.vector);
  }
  return out;
}

}  // namespace zdyn
