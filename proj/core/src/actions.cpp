#include "zdyn/actions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "zdyn/error.hpp"

namespace zdyn {
namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorKind::ValidationError, message);
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// Distinct primes of |x| found by trial division.
void collect_primes(BigInt x, std::set<std::uint64_t>& primes) {
  x = abs(x);
  for (std::uint64_t p = 2; x > 1; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > x) {
      if (!x.fits_ulong_p()) invalid("generator has a prime factor too large for trial division");
      primes.insert(x.get_ui());
      break;
    }
    if (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
      primes.insert(p);
      while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) x /= p;
    }
  }
}

// Removes every listed prime from x; returns what is left.
BigInt strip_primes(BigInt x, const std::vector<std::uint64_t>& primes) {
  x = abs(x);
  for (std::uint64_t p : primes) {
    BigInt prime(static_cast<unsigned long>(p));
    mpz_remove(x.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
  }
  return x;
}

long f2_exponent_sum(const std::vector<F2Laurent>& gens, F2Place place, const LatticePoint& n) {
  long total = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) total += n[i] * f2_place_exponent(gens[i], place);
  return total;
}

}  // namespace

std::string place_label(const Place& place) {
  return std::visit(Overloaded{
                        [](const RationalPrime& p) { return std::to_string(p.p); },
                        [](const Embedding& e) {
                          return e.images.empty() ? std::string("inf")
                                                  : "embedding:" + std::to_string(e.index);
                        },
                        [](const F2FunctionPlace& f) { return to_string(f.variant); },
                    },
                    place);
}

std::string to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::RationalSInteger: return "rational-s-integer";
    case FieldKind::F2FunctionField: return "f2-function-field";
    case FieldKind::NumberFieldMatrices: return "number-field-matrices";
  }
  return "?";
}

std::size_t PrimeComponent::rank() const noexcept {
  return std::visit([](const auto& g) { return g.size(); }, generators);
}

PrimeComponent rational_component(std::vector<BigRational> generators, int multiplicity) {
  std::set<std::uint64_t> primes;
  for (const auto& g : generators) {
    if (g == 0) invalid("zero generator");
    collect_primes(g.get_num(), primes);
    collect_primes(g.get_den(), primes);
  }
  PrimeComponent c;
  c.generators = std::move(generators);
  c.multiplicity = multiplicity;
  for (std::uint64_t p : primes) c.places.emplace_back(RationalPrime{p});
  c.places.emplace_back(Embedding{});
  return c;
}

PrimeComponent f2_component(std::vector<F2Laurent> generators, int multiplicity) {
  PrimeComponent c;
  for (F2Place v : {F2Place::Infinite, F2Place::T, F2Place::OnePlusT}) {
    const bool unbounded = std::any_of(generators.begin(), generators.end(), [v](const auto& g) {
      return !g.is_zero() && f2_place_exponent(g, v) != 0;
    });
    if (unbounded) c.places.emplace_back(F2FunctionPlace{v});
  }
  c.generators = std::move(generators);
  c.multiplicity = multiplicity;
  return c;
}

PrimeComponent matrix_component(std::vector<IntMatrix> generators, int multiplicity) {
  PrimeComponent c;
  const auto embeddings = simultaneous_eigendata(generators);
  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    c.places.emplace_back(Embedding{static_cast<int>(i), embeddings[i].images});
  }
  c.generators = std::move(generators);
  c.multiplicity = multiplicity;
  return c;
}

bool place_is_unbounded(const PrimeComponent& component, const Place& place) {
  return std::visit(
      Overloaded{
          [&](const std::vector<BigRational>& gens) {
            if (std::holds_alternative<Embedding>(place)) return true;  // Z sits inside the ring
            const auto* prime = std::get_if<RationalPrime>(&place);
            if (!prime) return false;
            return std::any_of(gens.begin(), gens.end(), [&](const BigRational& g) {
              return g != 0 && padic_valuation(g, prime->p) != 0;
            });
          },
          [&](const std::vector<F2Laurent>& gens) {
            const auto* f2 = std::get_if<F2FunctionPlace>(&place);
            if (!f2) return false;
            return std::any_of(gens.begin(), gens.end(), [&](const F2Laurent& g) {
              return !g.is_zero() && f2_place_exponent(g, f2->variant) != 0;
            });
          },
          [&](const std::vector<IntMatrix>&) {
            const auto* e = std::get_if<Embedding>(&place);
            if (!e) return false;
            return std::any_of(e->images.begin(), e->images.end(), [](const auto& z) {
              return std::fabs(std::log(std::abs(z))) > 1e-9;
            });
          },
      },
      component.generators);
}

void validate(const ActionSpec& spec) {
  if (spec.d == 0) invalid("d must be positive");
  if (spec.components.empty()) invalid("an action needs at least one component");
  for (std::size_t ci = 0; ci < spec.components.size(); ++ci) {
    const PrimeComponent& c = spec.components[ci];
    const std::string where = "component " + std::to_string(ci) + ": ";
    if (c.rank() != spec.d) {
      invalid(where + "expected " + std::to_string(spec.d) + " generators, got " +
              std::to_string(c.rank()));
    }
    if (c.multiplicity < 1) invalid(where + "multiplicity must be positive");
    if (c.places.empty()) invalid(where + "no places listed");
    for (std::size_t i = 0; i < c.places.size(); ++i) {
      for (std::size_t j = i + 1; j < c.places.size(); ++j) {
        if (c.places[i] == c.places[j]) invalid(where + "duplicate place " + place_label(c.places[i]));
      }
    }

    switch (c.kind()) {
      case FieldKind::RationalSInteger: {
        const auto& gens = std::get<std::vector<BigRational>>(c.generators);
        std::vector<std::uint64_t> primes;
        bool has_infinity = false;
        for (const Place& place : c.places) {
          if (const auto* p = std::get_if<RationalPrime>(&place)) {
            if (!is_prime(p->p)) invalid(where + std::to_string(p->p) + " is not prime");
            primes.push_back(p->p);
          } else if (const auto* e = std::get_if<Embedding>(&place); e && e->images.empty()) {
            has_infinity = true;
          } else {
            invalid(where + "place " + place_label(place) + " does not belong to Q");
          }
        }
        for (const auto& g : gens) {
          if (g == 0) invalid(where + "zero generator");
        }
        if (c.allow_bounded_places) break;
        if (!has_infinity) {
          invalid(where + "the archimedean place is unbounded on the ring and must be listed");
        }
        for (const auto& g : gens) {
          if (strip_primes(g.get_num(), primes) != 1 || strip_primes(g.get_den(), primes) != 1) {
            invalid(where + "generator " + to_string(g) +
                    " is not a unit at the listed places (a prime of it is missing)");
          }
        }
        break;
      }
      case FieldKind::F2FunctionField: {
        const auto& gens = std::get<std::vector<F2Laurent>>(c.generators);
        for (const Place& place : c.places) {
          if (!std::holds_alternative<F2FunctionPlace>(place)) {
            invalid(where + "place " + place_label(place) + " does not belong to F_2(t)");
          }
        }
        for (const auto& g : gens) {
          if (g.is_zero()) invalid(where + "zero generator");
          const long shifted_degree = g.high() - g.low();
          if (g.order_at_one_plus_t() != shifted_degree) {
            invalid(where + "generator " + g.to_string() +
                    " has an irreducible factor other than t and 1+t");
          }
        }
        if (c.allow_bounded_places) break;
        for (F2Place v : {F2Place::Infinite, F2Place::T, F2Place::OnePlusT}) {
          const bool listed =
              std::find(c.places.begin(), c.places.end(), Place{F2FunctionPlace{v}}) != c.places.end();
          if (place_is_unbounded(c, F2FunctionPlace{v}) && !listed) {
            invalid(where + "unbounded place " + to_string(v) + " is missing");
          }
        }
        break;
      }
      case FieldKind::NumberFieldMatrices: {
        const auto& gens = std::get<std::vector<IntMatrix>>(c.generators);
        const std::size_t k = gens.front().dimension();
        for (std::size_t i = 0; i < gens.size(); ++i) {
          if (gens[i].dimension() != k || k == 0) invalid(where + "matrices must share one size");
          if (abs(int_matrix_det(gens[i])) != 1) {
            invalid(where + "matrix " + std::to_string(i) + " is not unimodular");
          }
          for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (gens[i] * gens[j] != gens[j] * gens[i]) {
              invalid(where + "matrices " + std::to_string(i) + " and " + std::to_string(j) +
                      " do not commute");
            }
          }
        }
        std::size_t embeddings = 0;
        for (const Place& place : c.places) {
          const auto* e = std::get_if<Embedding>(&place);
          if (!e || e->images.size() != gens.size()) {
            invalid(where + "matrix components carry one embedding place per eigenvalue");
          }
          ++embeddings;
        }
        if (embeddings != k) {
          invalid(where + "expected " + std::to_string(k) + " embeddings, got " +
                  std::to_string(embeddings));
        }
        break;
      }
    }

    if (!c.allow_bounded_places) {
      for (const Place& place : c.places) {
        if (!place_is_unbounded(c, place)) {
          invalid(where + "place " + place_label(place) +
                  " is bounded on the ring (set allow_bounded_places to permit it)");
        }
      }
    }
  }

  // Product formula: each component's Lyapunov vectors cancel.
  const LyapunovList list = lyapunov_list(spec);
  if (list.entries.empty()) invalid("the Lyapunov list is empty");
  for (std::size_t ci = 0; ci < spec.components.size(); ++ci) {
    if (spec.components[ci].allow_bounded_places) continue;
    Vector sum(spec.d, 0.0);
    double scale = 1.0;
    for (const auto& e : list.entries) {
      if (e.component != ci) continue;
      for (std::size_t i = 0; i < spec.d; ++i) {
        sum[i] += e.vector[i];
        scale += std::fabs(e.vector[i]);
      }
    }
    for (double s : sum) {
      if (std::fabs(s) > 1e-12 * scale) {
        invalid("component " + std::to_string(ci) +
                ": Lyapunov vectors do not cancel; the place set is incomplete");
      }
    }
  }
}

std::vector<Vector> LyapunovList::vectors() const {
  std::vector<Vector> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.vector);
  return out;
}

LyapunovList LyapunovList::scaled(double factor) const {
  LyapunovList out = *this;
  for (auto& e : out.entries) {
    for (double& x : e.vector) x *= factor;
    if (factor != 1.0) e.log2_units.reset();
  }
  return out;
}

LyapunovList make_lyapunov_list(std::size_t d, const std::vector<Vector>& vectors) {
  LyapunovList list;
  list.d = d;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != d) throw Error(ErrorKind::InvalidArgument, "vector dimension mismatch");
    list.entries.push_back(LyapunovEntry{vectors[i], 0, i, std::nullopt});
  }
  return list;
}

LyapunovList lyapunov_list(const ActionSpec& spec) {
  LyapunovList list;
  list.d = spec.d;
  for (std::size_t ci = 0; ci < spec.components.size(); ++ci) {
    const PrimeComponent& c = spec.components[ci];
    for (std::size_t pi = 0; pi < c.places.size(); ++pi) {
      LyapunovEntry entry;
      entry.component = ci;
      entry.place = pi;
      entry.vector.assign(spec.d, 0.0);
      const Place& place = c.places[pi];
      switch (c.kind()) {
        case FieldKind::RationalSInteger: {
          const auto& gens = std::get<std::vector<BigRational>>(c.generators);
          for (std::size_t i = 0; i < spec.d; ++i) {
            if (const auto* p = std::get_if<RationalPrime>(&place)) {
              entry.vector[i] = -static_cast<double>(padic_valuation(gens[i], p->p)) *
                                std::log(static_cast<double>(p->p));
            } else {
              entry.vector[i] = log_abs(gens[i]);
            }
          }
          break;
        }
        case FieldKind::F2FunctionField: {
          const auto& gens = std::get<std::vector<F2Laurent>>(c.generators);
          const F2Place v = std::get<F2FunctionPlace>(place).variant;
          std::vector<long> units(spec.d);
          for (std::size_t i = 0; i < spec.d; ++i) {
            units[i] = f2_place_exponent(gens[i], v);
            entry.vector[i] = static_cast<double>(units[i]) * std::numbers::ln2;
          }
          entry.log2_units = std::move(units);
          break;
        }
        case FieldKind::NumberFieldMatrices: {
          const auto& e = std::get<Embedding>(place);
          for (std::size_t i = 0; i < spec.d; ++i) entry.vector[i] = std::log(std::abs(e.images[i]));
          break;
        }
      }
      for (int m = 0; m < c.multiplicity; ++m) list.entries.push_back(entry);
    }
  }
  return list;
}

PlaceLog place_log(const PrimeComponent& c, std::size_t place_index, const LatticePoint& n) {
  const Place& place = c.places.at(place_index);
  switch (c.kind()) {
    case FieldKind::RationalSInteger: {
      const auto& gens = std::get<std::vector<BigRational>>(c.generators);
      if (const auto* p = std::get_if<RationalPrime>(&place)) {
        long v = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) v += n[i] * padic_valuation(gens[i], p->p);
        return {-static_cast<double>(v) * std::log(static_cast<double>(p->p)), v == 0};
      }
      BigRational u = 1;
      double value = 0.0;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (n[i] == 0) continue;
        u *= pow(gens[i], n[i]);
        value += static_cast<double>(n[i]) * log_abs(gens[i]);
      }
      return {value, abs(u) == 1};
    }
    case FieldKind::F2FunctionField: {
      const auto& gens = std::get<std::vector<F2Laurent>>(c.generators);
      const long units = f2_exponent_sum(gens, std::get<F2FunctionPlace>(place).variant, n);
      return {static_cast<double>(units) * std::numbers::ln2, units == 0};
    }
    case FieldKind::NumberFieldMatrices: {
      const auto& e = std::get<Embedding>(place);
      double value = 0.0;
      double scale = 0.0;
      for (std::size_t i = 0; i < e.images.size(); ++i) {
        const double term = static_cast<double>(n[i]) * std::log(std::abs(e.images[i]));
        value += term;
        scale += std::fabs(term);
      }
      return {value, std::fabs(value) <= 1e-9 * (1.0 + scale)};
    }
  }
  return {};
}

std::vector<double> EigenEmbedding::abs_images() const {
  std::vector<double> out;
  out.reserve(images.size());
  for (const auto& z : images) out.push_back(std::abs(z));
  return out;
}

}  // namespace zdyn
