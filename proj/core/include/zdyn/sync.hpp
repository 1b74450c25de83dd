#pragma once

#include <string>
#include <vector>

#include "zdyn/actions.hpp"

namespace zdyn {

/// Endomorphisms x -> lambda x of the solenoid dual to a ring of S-integers.
struct SyncFamily {
  ActionSpec ambient;  // one rational component; its places fix S
  std::vector<BigRational> maps;

  std::size_t index_of(const BigRational& lambda) const;  // InvalidArgument if absent
};

/// Requires |maps| >= 2, maps pairwise distinct (DegenerateSync otherwise) and
/// each map a nonzero S-integer of the ambient ring.
SyncFamily make_sync_family(const ActionSpec& ambient, std::vector<BigRational> maps);

/// The family a catalog action carries: sync_1_2_3 gives {x1, x2, x3}; other
/// rational actions give their generators.
SyncFamily default_sync_family(const ActionSpec& ambient);

/// |S_n(alpha, beta)|: the product over the ambient places of
/// |lambda_alpha^n - lambda_beta^n|_v, which is fix_count when beta is the
/// identity. DegenerateSync when the two powers coincide.
BigInt weak_sync_count(const SyncFamily& family, const BigRational& alpha, const BigRational& beta,
                       unsigned long n);

/// gcd(2^n - 1, 3^n - 1), the strong count for {x1, x2, x3}.
BigInt strong_sync_count_123(unsigned long n);

/// max over ordered pairs of exp(sum_v max(log |lambda_alpha / lambda_beta|_v, 0)).
double sync_growth_rate(const SyncFamily& family);

struct RstarEntry {
  unsigned long n = 0;
  BigInt count;
  double root = 0.0;      // count^{1/n}
  double tail_max = 0.0;  // max of root over n..n_max
  bool trivial = false;   // count == 1
};

/// Strong counts for n = 1..n_max; only for the {x1, x2, x3} family
/// (UnsupportedFamily otherwise).
std::vector<RstarEntry> rstar_trace(const SyncFamily& family, unsigned long n_max);

}  // namespace zdyn
