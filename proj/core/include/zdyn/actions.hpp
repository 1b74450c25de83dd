#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zdyn/f2_laurent.hpp"
#include "zdyn/int_matrix.hpp"
#include "zdyn/rational.hpp"

namespace zdyn {

using Vector = std::vector<double>;
using LatticePoint = std::vector<long>;

// ---------------------------------------------------------------------------
// Places

/// A finite place of Q.
struct RationalPrime {
  std::uint64_t p = 2;
  bool operator==(const RationalPrime&) const = default;
};

/// An archimedean place. For rational components this is the usual absolute
/// value (index 0); for matrix components each eigenvalue of the commuting
/// family is one embedding, with `images` holding the image of every generator.
struct Embedding {
  int index = 0;
  std::vector<std::complex<double>> images;
  bool operator==(const Embedding&) const = default;
};

struct F2FunctionPlace {
  F2Place variant = F2Place::Infinite;
  bool operator==(const F2FunctionPlace&) const = default;
};

using Place = std::variant<RationalPrime, Embedding, F2FunctionPlace>;

std::string place_label(const Place& place);

// ---------------------------------------------------------------------------
// Components and actions

enum class FieldKind { RationalSInteger, F2FunctionField, NumberFieldMatrices };

std::string to_string(FieldKind kind);

using Generators =
    std::variant<std::vector<BigRational>, std::vector<F2Laurent>, std::vector<IntMatrix>>;

/// One associated prime of the dual module: the images of u_1..u_d in the
/// quotient domain, its unbounded places, and its multiplicity.
struct PrimeComponent {
  Generators generators;
  std::vector<Place> places;
  int multiplicity = 1;
  /// Permits places where every generator is a unit; such places enter
  /// periodic-point counts through the inverse absolute value.
  bool allow_bounded_places = false;

  FieldKind kind() const noexcept { return static_cast<FieldKind>(generators.index()); }
  std::size_t rank() const noexcept;
  bool operator==(const PrimeComponent&) const = default;
};

/// Component over Q with the complete unbounded place set {inf} u {primes of
/// the generators}, found by trial division.
PrimeComponent rational_component(std::vector<BigRational> generators, int multiplicity = 1);
/// Component over F_2(t); generators must be supported on t and 1+t.
PrimeComponent f2_component(std::vector<F2Laurent> generators, int multiplicity = 1);
/// Commuting unimodular matrices; one embedding place per common eigenvector.
PrimeComponent matrix_component(std::vector<IntMatrix> generators, int multiplicity = 1);

struct ActionSpec {
  std::string name;
  std::size_t d = 0;
  std::vector<PrimeComponent> components;
  bool operator==(const ActionSpec&) const = default;
};

/// Throws ValidationError describing the first violated invariant.
void validate(const ActionSpec& spec);

/// Is `place` unbounded on the ring generated by the component's generators
/// and their inverses, i.e. does some generator have |g|_v != 1?
bool place_is_unbounded(const PrimeComponent& component, const Place& place);

// ---------------------------------------------------------------------------
// Lyapunov data

struct LyapunovEntry {
  Vector vector;  // nats
  std::size_t component = 0;
  std::size_t place = 0;
  /// For function-field components: the vector in exact units of log 2.
  std::optional<std::vector<long>> log2_units;
};

struct LyapunovList {
  std::size_t d = 0;
  std::vector<LyapunovEntry> entries;  // repeated by multiplicity

  std::vector<Vector> vectors() const;
  LyapunovList scaled(double factor) const;
};

/// Builds a bare list from raw vectors (tests, relational entropy, synthetic cases).
LyapunovList make_lyapunov_list(std::size_t d, const std::vector<Vector>& vectors);

/// One vector (log|u_1|_v, ..., log|u_d|_v) per (component, place), repeated
/// by the component multiplicity.
LyapunovList lyapunov_list(const ActionSpec& spec);

/// log|u^n|_v for one component and one of its places. Exact to double
/// precision; `exactly_zero` reports whether the value vanishes exactly
/// (decided in exact arithmetic for rational and F_2 components).
struct PlaceLog {
  double value = 0.0;
  bool exactly_zero = false;
};
PlaceLog place_log(const PrimeComponent& component, std::size_t place_index, const LatticePoint& n);

// ---------------------------------------------------------------------------
// Simultaneous eigendata of commuting integer matrices

struct EigenEmbedding {
  std::vector<std::complex<double>> images;  // one per matrix
  std::vector<double> abs_images() const;
};

/// Common eigenvectors of a commuting family, found through a random integer
/// combination (coefficients in [1, 10], fixed seed). Embeddings are sorted by
/// descending real parts of the images. Throws EigenSeparationFailure.
std::vector<EigenEmbedding> simultaneous_eigendata(const std::vector<IntMatrix>& matrices);

// ---------------------------------------------------------------------------
// Catalog and action files

/// times2_times3, ledrappier, toral_sqrt2_sqrt5, z5_times2_times3, sync_1_2_3.
ActionSpec catalog(const std::string& name);
std::vector<std::string> catalog_names();

/// Multiplication by a + b*sqrt2 + c*sqrt5 + e*sqrt10 on the Z-basis
/// {1, sqrt2, sqrt5, sqrt10} of Z[sqrt2, sqrt5].
IntMatrix sqrt2_sqrt5_multiplication_matrix(long a, long b, long c, long e);

/// Parses the JSON action schema. Throws ParseError or ValidationError.
ActionSpec parse_action_file(const std::string& text);
std::string serialize_action(const ActionSpec& spec);

/// `name_or_path` is a catalog name or a path to an action file.
ActionSpec load_action(const std::string& name_or_path);

}  // namespace zdyn
