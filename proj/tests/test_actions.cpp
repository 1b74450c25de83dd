#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "zdyn/actions.hpp"
#include "zdyn/error.hpp"

using namespace zdyn;

namespace {

const double l2 = std::log(2.0);
const double l3 = std::log(3.0);

std::vector<Vector> sorted_vectors(const LyapunovList& list) {
  auto vs = list.vectors();
  std::sort(vs.begin(), vs.end());
  return vs;
}

// pairs each wanted vector with its closest unused neighbour, sorting is fragile under rounding
void expect_vectors_near(const std::vector<Vector>& got, const std::vector<Vector>& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  std::vector<bool> used(got.size(), false);
  for (std::size_t i = 0; i < want.size(); ++i) {
    std::size_t best = got.size();
    double best_dist = INFINITY;
    for (std::size_t j = 0; j < got.size(); ++j) {
      if (used[j] || got[j].size() != want[i].size()) continue;
      double dist = 0;
      for (std::size_t k = 0; k < got[j].size(); ++k) dist = std::max(dist, std::fabs(got[j][k] - want[i][k]));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    ASSERT_LT(best, got.size()) << i;
    used[best] = true;
    EXPECT_LT(best_dist, tol) << "wanted vector " << i;
  }
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Catalog, Shapes) {
  const ActionSpec a = catalog("times2_times3");
  EXPECT_EQ(a.d, 2u);
  ASSERT_EQ(a.components.size(), 1u);
  EXPECT_EQ(a.components[0].kind(), FieldKind::RationalSInteger);
  EXPECT_EQ(a.components[0].places.size(), 3u);
  EXPECT_EQ(a.components[0].multiplicity, 1);

  const ActionSpec b = catalog("ledrappier");
  EXPECT_EQ(b.components[0].kind(), FieldKind::F2FunctionField);
  EXPECT_EQ(b.components[0].places.size(), 3u);

  const ActionSpec z = catalog("z5_times2_times3");
  ASSERT_EQ(z.components[0].places.size(), 1u);
  EXPECT_EQ(std::get<RationalPrime>(z.components[0].places[0]).p, 5u);
  EXPECT_TRUE(z.components[0].allow_bounded_places);

  EXPECT_EQ(catalog("toral_sqrt2_sqrt5").d, 3u);
  EXPECT_EQ(kind_of([] { catalog("nope"); }), ErrorKind::UnknownAction);
  for (const auto& name : catalog_names()) EXPECT_NO_THROW(validate(catalog(name))) << name;
}

TEST(Lyapunov, RationalExample) {
  expect_vectors_near(lyapunov_list(catalog("times2_times3")).vectors(),
                      {{l2, l3}, {-l2, 0}, {0, -l3}}, 1e-15);
}

TEST(Lyapunov, LedrappierIsExactInUnitsOfLog2) {
  const LyapunovList list = lyapunov_list(catalog("ledrappier"));
  std::vector<std::vector<long>> units;
  for (const auto& e : list.entries) {
    ASSERT_TRUE(e.log2_units.has_value());
    units.push_back(*e.log2_units);
  }
  std::sort(units.begin(), units.end());
  EXPECT_EQ(units, (std::vector<std::vector<long>>{{-1, 0}, {0, -1}, {1, 1}}));
  expect_vectors_near(list.vectors(), {{l2, l2}, {-l2, 0}, {0, -l2}}, 1e-15);
}

TEST(Lyapunov, ToralFromSurds) {
  // tau runs over the sign choices for sqrt2 and sqrt5; sqrt10 follows their product
  std::vector<Vector> want;
  for (int s2 : {1, -1}) {
    for (int s5 : {1, -1}) {
      const double r2 = s2 * std::sqrt(2.0), r5 = s5 * std::sqrt(5.0), r10 = s2 * s5 * std::sqrt(10.0);
      want.push_back({std::log(std::fabs(1 + r2)), std::log(std::fabs(2 + r5)), std::log(std::fabs(3 + r10))});
    }
  }
  expect_vectors_near(lyapunov_list(catalog("toral_sqrt2_sqrt5")).vectors(), want, 1e-10);
}

TEST(Lyapunov, ZeroSumPerComponent) {
  for (const auto& name : catalog_names()) {
    const ActionSpec spec = catalog(name);
    const LyapunovList list = lyapunov_list(spec);
    for (std::size_t c = 0; c < spec.components.size(); ++c) {
      Vector sum(spec.d, 0.0);
      for (const auto& e : list.entries) {
        if (e.component != c) continue;
        for (std::size_t k = 0; k < spec.d; ++k) sum[k] += e.vector[k];
      }
      for (double s : sum) EXPECT_LT(std::fabs(s), 1e-12) << name;
    }
  }
}

TEST(Lyapunov, PermutationStable) {
  ActionSpec a = catalog("times2_times3");
  ActionSpec b = a;
  std::reverse(b.components[0].places.begin(), b.components[0].places.end());
  EXPECT_EQ(sorted_vectors(lyapunov_list(a)), sorted_vectors(lyapunov_list(b)));

  ActionSpec two;
  two.name = "two";
  two.d = 2;
  two.components = {rational_component({2, 3}), f2_component({F2Laurent::monomial(1), F2Laurent::one_plus_t()}, 2)};
  ActionSpec swapped = two;
  std::swap(swapped.components[0], swapped.components[1]);
  const auto x = sorted_vectors(lyapunov_list(two));
  EXPECT_EQ(x.size(), 3u + 2 * 3u);
  EXPECT_EQ(x, sorted_vectors(lyapunov_list(swapped)));
}

TEST(Eigendata, ToralIdentityEmbedding) {
  const auto spec = catalog("toral_sqrt2_sqrt5");
  const auto& ms = std::get<std::vector<IntMatrix>>(spec.components[0].generators);
  const auto data = simultaneous_eigendata(ms);
  ASSERT_EQ(data.size(), 4u);
  const Vector want = {1 + std::sqrt(2.0), 2 + std::sqrt(5.0), 3 + std::sqrt(10.0)};
  bool found = false;
  for (const auto& e : data) {
    const auto abs = e.abs_images();
    bool match = true;
    for (std::size_t i = 0; i < 3; ++i) match = match && std::fabs(abs[i] - want[i]) < 1e-9;
    found = found || match;
  }
  EXPECT_TRUE(found);

  // units have norm +-1
  for (std::size_t i = 0; i < 3; ++i) {
    double s = 0.0;
    for (const auto& e : data) s += std::log(e.abs_images()[i]);
    EXPECT_NEAR(s, 0.0, 1e-10);
  }
}

TEST(Eigendata, SmallCases) {
  const auto one = simultaneous_eigendata({IntMatrix{{2}}});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_NEAR(one[0].abs_images()[0], 2.0, 1e-12);

  const auto xi1 = simultaneous_eigendata({sqrt2_sqrt5_multiplication_matrix(1, 1, 0, 0)});
  std::vector<double> abs;
  for (const auto& e : xi1) abs.push_back(e.abs_images()[0]);
  std::sort(abs.begin(), abs.end());
  const double r = std::sqrt(2.0);
  ASSERT_EQ(abs.size(), 4u);
  EXPECT_NEAR(abs[0], r - 1, 1e-9);
  EXPECT_NEAR(abs[1], r - 1, 1e-9);
  EXPECT_NEAR(abs[2], r + 1, 1e-9);
  EXPECT_NEAR(abs[3], r + 1, 1e-9);
}

TEST(Eigendata, ComplexEmbeddings) {
  // order 6, eigenvalues on the unit circle
  const auto data = simultaneous_eigendata({IntMatrix{{0, -1}, {1, 1}}});
  ASSERT_EQ(data.size(), 2u);
  for (const auto& e : data) EXPECT_NEAR(std::abs(e.images[0]), 1.0, 1e-12);
}

TEST(ActionFile, RoundTripsCatalog) {
  for (const auto& name : catalog_names()) {
    const ActionSpec spec = catalog(name);
    const ActionSpec back = parse_action_file(serialize_action(spec));
    EXPECT_EQ(back.name, spec.name);
    EXPECT_EQ(back.d, spec.d);
    EXPECT_EQ(sorted_vectors(lyapunov_list(back)), sorted_vectors(lyapunov_list(spec))) << name;
    EXPECT_EQ(serialize_action(back), serialize_action(spec));
  }
}

TEST(ActionFile, Rejections) {
  const std::string missing_inf = R"({"name":"x","d":2,"components":[
    {"kind":"rational-s-integer","generators":["2","3"],"places":["2","3"],"multiplicity":1}]})";
  EXPECT_EQ(kind_of([&] { parse_action_file(missing_inf); }), ErrorKind::ValidationError);

  const std::string noncommuting = R"({"name":"x","d":2,"components":[
    {"kind":"number-field-matrices","generators":["2 1; 1 1","1 1; 0 1"],"places":["embedding"],"multiplicity":1}]})";
  EXPECT_EQ(kind_of([&] { parse_action_file(noncommuting); }), ErrorKind::ValidationError);

  const std::string not_unit = R"({"name":"x","d":2,"components":[
    {"kind":"rational-s-integer","generators":["2","5"],"places":["2","3","inf"],"multiplicity":1}]})";
  EXPECT_EQ(kind_of([&] { parse_action_file(not_unit); }), ErrorKind::ValidationError);

  const std::string composite = R"({"name":"x","d":2,"components":[
    {"kind":"rational-s-integer","generators":["2","3"],"places":["2","3","6","inf"],"multiplicity":1}]})";
  EXPECT_NE(kind_of([&] { parse_action_file(composite); }), ErrorKind::ParseError);

  EXPECT_EQ(kind_of([] { parse_action_file("{not json"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_action_file(R"({"name":"x"})"); }), ErrorKind::ParseError);
}

TEST(ActionFile, ZeroSumViolation) {
  // 2 and 3 with only the 2-adic place and infinity: the 3 is not a unit there
  ActionSpec spec;
  spec.name = "bad";
  spec.d = 2;
  PrimeComponent c = rational_component({2, 3});
  c.places.erase(c.places.begin() + 1);
  spec.components = {c};
  EXPECT_EQ(kind_of([&] { validate(spec); }), ErrorKind::ValidationError);
}

TEST(ActionFile, RankMismatch) {
  ActionSpec spec;
  spec.name = "bad";
  spec.d = 3;
  spec.components = {rational_component({2, 3})};
  EXPECT_EQ(kind_of([&] { validate(spec); }), ErrorKind::ValidationError);
}
