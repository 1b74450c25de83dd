#include "zdyn/sync.hpp"

#include <algorithm>
#include <cmath>

#include "zdyn/error.hpp"

namespace zdyn {
namespace {

const PrimeComponent& solenoid_component(const ActionSpec& ambient) {
  if (ambient.components.size() != 1 ||
      ambient.components.front().kind() != FieldKind::RationalSInteger ||
      ambient.components.front().allow_bounded_places) {
    throw Error(ErrorKind::UnsupportedFamily,
                "synchronization needs a solenoid: one rational component with unbounded places");
  }
  return ambient.components.front();
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// |x|_v as an exact rational.
BigRational place_abs(const BigRational& x, const Place& place) {
  if (const auto* p = std::get_if<RationalPrime>(&place)) {
    const long v = padic_valuation(x, p->p);
    const BigInt pe = ipow(BigInt(static_cast<unsigned long>(p->p)), static_cast<unsigned long>(std::labs(v)));
    return v > 0 ? BigRational(1, pe) : BigRational(pe);
  }
  return abs(x);
}

}  // namespace

std::size_t SyncFamily::index_of(const BigRational& lambda) const {
  const auto it = std::find(maps.begin(), maps.end(), lambda);
  if (it == maps.end()) {
    throw Error(ErrorKind::InvalidArgument, "x" + to_string(lambda) + " is not in the family");
  }
  return static_cast<std::size_t>(it - maps.begin());
}

SyncFamily make_sync_family(const ActionSpec& ambient, std::vector<BigRational> maps) {
  const PrimeComponent& c = solenoid_component(ambient);
  if (maps.size() < 2) throw Error(ErrorKind::InvalidArgument, "a family needs at least two maps");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i] == 0) throw Error(ErrorKind::InvalidArgument, "x0 is not an endomorphism of interest");
    BigInt den = maps[i].get_den();
    for (const auto& place : c.places) {
      if (const auto* p = std::get_if<RationalPrime>(&place)) {
        const BigInt prime(static_cast<unsigned long>(p->p));
        mpz_remove(den.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t());
      }
    }
    if (den != 1) {
      throw Error(ErrorKind::InvalidArgument, "x" + to_string(maps[i]) + " does not preserve the ring");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (maps[i] == maps[j]) {
        throw Error(ErrorKind::DegenerateSync, "maps must be distinct; x" + to_string(maps[i]) + " repeats");
      }
    }
  }
  return {ambient, std::move(maps)};
}

SyncFamily default_sync_family(const ActionSpec& ambient) {
  const PrimeComponent& c = solenoid_component(ambient);
  std::vector<BigRational> maps;
  if (ambient.name == "sync_1_2_3") maps.emplace_back(1);
  for (const auto& g : std::get<std::vector<BigRational>>(c.generators)) maps.push_back(g);
  return make_sync_family(ambient, std::move(maps));
}

BigInt weak_sync_count(const SyncFamily& family, const BigRational& alpha, const BigRational& beta,
                       unsigned long n) {
  family.index_of(alpha);
  family.index_of(beta);
  if (n == 0) throw Error(ErrorKind::ZeroExponent, "n must be positive");
  const BigRational x = pow(alpha, static_cast<long>(n)) - pow(beta, static_cast<long>(n));
  if (x == 0) {
    throw Error(ErrorKind::DegenerateSync, "x" + to_string(alpha) + " and x" + to_string(beta) +
                                               " agree at time " + std::to_string(n));
  }
  BigRational product = 1;
  for (const auto& place : solenoid_component(family.ambient).places) product *= place_abs(x, place);
  if (product.get_den() != 1) {
    throw Error(ErrorKind::ValidationError, "place product is not an integer; the place list is incomplete");
  }
  return product.get_num();
}

BigInt strong_sync_count_123(unsigned long n) {
  if (n == 0) throw Error(ErrorKind::ZeroExponent, "n must be positive");
  BigInt g;
  const BigInt a = ipow(2, n) - 1;
  const BigInt b = ipow(3, n) - 1;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

double sync_growth_rate(const SyncFamily& family) {
  const auto& places = solenoid_component(family.ambient).places;
  BigRational best = 0;
  for (const auto& a : family.maps) {
    for (const auto& b : family.maps) {
      if (a == b) continue;
      const BigRational q = a / b;
      BigRational rate = 1;
      for (const auto& place : places) rate *= std::max(place_abs(q, place), BigRational(1));
      best = std::max(best, rate);
    }
  }
  return best.get_d();
}

std::vector<RstarEntry> rstar_trace(const SyncFamily& family, unsigned long n_max) {
  std::vector<BigRational> sorted = family.maps;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<BigRational>{BigRational(1), BigRational(2), BigRational(3)}) {
    throw Error(ErrorKind::UnsupportedFamily, "strong counts are only available for {x1, x2, x3}");
  }
  std::vector<RstarEntry> out;
  for (unsigned long n = 1; n <= n_max; ++n) {
    RstarEntry e;
    e.n = n;
    e.count = strong_sync_count_123(n);
    e.root = e.count == 1 ? 1.0 : std::exp(log_abs(e.count) / static_cast<double>(n));
    e.trivial = e.count == 1;
    out.push_back(std::move(e));
  }
  double running = 0.0;
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    running = std::max(running, it->root);
    it->tail_max = running;
  }
  return out;
}

}  // namespace zdyn
