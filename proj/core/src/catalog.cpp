#include <fstream>
#include <sstream>

#include "zdyn/actions.hpp"
#include "zdyn/error.hpp"

namespace zdyn {

IntMatrix sqrt2_sqrt5_multiplication_matrix(long a, long b, long c, long e) {
  // column j holds the coordinates of x * basis_j
  return IntMatrix{
      {a, 2 * b, 5 * c, 10 * e},
      {b, a, 5 * e, 5 * c},
      {c, 2 * e, a, 2 * b},
      {e, c, b, a},
  };
}

std::vector<std::string> catalog_names() {
  return {"times2_times3", "ledrappier", "toral_sqrt2_sqrt5", "z5_times2_times3", "sync_1_2_3"};
}

ActionSpec catalog(const std::string& name) {
  ActionSpec spec;
  spec.name = name;
  spec.d = 2;
  if (name == "times2_times3" || name == "sync_1_2_3") {
    // sync_1_2_3 lives on the same solenoid; the identity map joins in the sync module
    spec.components.push_back(rational_component({BigRational(2), BigRational(3)}));
  } else if (name == "ledrappier") {
    spec.components.push_back(f2_component({F2Laurent::monomial(1), F2Laurent::one_plus_t()}));
  } else if (name == "toral_sqrt2_sqrt5") {
    spec.d = 3;
    spec.components.push_back(matrix_component({
        sqrt2_sqrt5_multiplication_matrix(1, 1, 0, 0),
        sqrt2_sqrt5_multiplication_matrix(2, 0, 1, 0),
        sqrt2_sqrt5_multiplication_matrix(3, 0, 0, 1),
    }));
  } else if (name == "z5_times2_times3") {
    PrimeComponent c;
    c.generators = std::vector<BigRational>{BigRational(2), BigRational(3)};
    c.places = {RationalPrime{5}};
    c.allow_bounded_places = true;
    spec.components.push_back(std::move(c));
  } else {
    throw Error(ErrorKind::UnknownAction, "unknown action '" + name + "'");
  }
  return spec;
}

ActionSpec load_action(const std::string& name_or_path) {
  for (const auto& known : catalog_names()) {
    if (known == name_or_path) return catalog(known);
  }
  std::ifstream in(name_or_path);
  if (!in) {
    throw Error(ErrorKind::UnknownAction,
                "'" + name_or_path + "' is neither a catalog action nor a readable file");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_action_file(buffer.str());
}

}  // namespace zdyn
