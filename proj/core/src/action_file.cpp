#include "json.hpp"
#include "zdyn/actions.hpp"
#include "zdyn/error.hpp"

namespace zdyn {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& message) {
  throw Error(ErrorKind::ParseError, "action file: " + message);
}

const json& require(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const json& value, const char* key) {
  if (!value.is_array()) malformed(std::string("'") + key + "' must be a list of strings");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) malformed(std::string("'") + key + "' must be a list of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Place parse_place(const std::string& text, FieldKind kind) {
  if (kind == FieldKind::F2FunctionField) {
    if (text == "inf") return F2FunctionPlace{F2Place::Infinite};
    if (text == "t") return F2FunctionPlace{F2Place::T};
    if (text == "t+1" || text == "1+t") return F2FunctionPlace{F2Place::OnePlusT};
    malformed("unknown F_2(t) place '" + text + "'");
  }
  if (text == "inf") return Embedding{};
  try {
    std::size_t used = 0;
    const unsigned long long p = std::stoull(text, &used);
    if (used == text.size()) return RationalPrime{p};
  } catch (const std::exception&) {
  }
  malformed("unknown place '" + text + "'");
}

PrimeComponent parse_component(const json& node) {
  if (!node.is_object()) malformed("each component must be an object");
  const json& kind_node = require(node, "kind");
  if (!kind_node.is_string()) malformed("'kind' must be a string");
  const std::string kind = kind_node.get<std::string>();
  const auto generators = string_list(require(node, "generators"), "generators");
  const auto places = string_list(require(node, "places"), "places");
  int multiplicity = 1;
  if (auto it = node.find("multiplicity"); it != node.end()) {
    if (!it->is_number_integer()) malformed("'multiplicity' must be an integer");
    multiplicity = it->get<int>();
  }
  bool allow_bounded = false;
  if (auto it = node.find("allow_bounded_places"); it != node.end()) {
    if (!it->is_boolean()) malformed("'allow_bounded_places' must be a boolean");
    allow_bounded = it->get<bool>();
  }

  PrimeComponent c;
  if (kind == "rational-s-integer") {
    std::vector<BigRational> gens;
    for (const auto& g : generators) gens.push_back(parse_rational(g));
    c.generators = std::move(gens);
  } else if (kind == "f2-function-field") {
    std::vector<F2Laurent> gens;
    for (const auto& g : generators) gens.push_back(F2Laurent::parse(g));
    c.generators = std::move(gens);
  } else if (kind == "number-field-matrices") {
    std::vector<IntMatrix> gens;
    for (const auto& g : generators) gens.push_back(IntMatrix::parse(g));
    for (const auto& p : places) {
      if (p != "embedding") malformed("matrix components list their places as \"embedding\"");
    }
    const std::size_t k = gens.empty() ? 0 : gens.front().dimension();
    for (const auto& m : gens) {
      if (m.dimension() != k) throw Error(ErrorKind::ValidationError, "matrices must share one size");
      if (abs(int_matrix_det(m)) != 1) throw Error(ErrorKind::ValidationError, "matrix is not unimodular");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (gens[i] * gens[j] != gens[j] * gens[i]) {
          throw Error(ErrorKind::ValidationError, "matrices " + std::to_string(i) + " and " +
                                                      std::to_string(j) + " do not commute");
        }
      }
    }
    if (gens.empty()) {
      c.generators = std::move(gens);
    } else {
      c = matrix_component(std::move(gens), multiplicity);
    }
    c.allow_bounded_places = allow_bounded;
    return c;
  } else {
    malformed("unknown component kind '" + kind + "'");
  }
  for (const auto& p : places) c.places.push_back(parse_place(p, c.kind()));
  c.multiplicity = multiplicity;
  c.allow_bounded_places = allow_bounded;
  return c;
}

}  // namespace

ActionSpec parse_action_file(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    malformed(e.what());
  }
  if (!root.is_object()) malformed("top level must be an object");
  ActionSpec spec;
  const json& name = require(root, "name");
  if (!name.is_string()) malformed("'name' must be a string");
  spec.name = name.get<std::string>();
  const json& d = require(root, "d");
  if (!d.is_number_integer() || d.get<long>() <= 0) malformed("'d' must be a positive integer");
  spec.d = d.get<std::size_t>();
  const json& components = require(root, "components");
  if (!components.is_array()) malformed("'components' must be a list");
  for (const auto& node : components) spec.components.push_back(parse_component(node));
  validate(spec);
  return spec;
}

std::string serialize_action(const ActionSpec& spec) {
  json root;
  root["name"] = spec.name;
  root["d"] = spec.d;
  root["components"] = json::array();
  for (const auto& c : spec.components) {
    json node;
    node["kind"] = to_string(c.kind());
    json gens = json::array();
    std::visit(
        [&](const auto& list) {
          for (const auto& g : list) {
            if constexpr (std::is_same_v<std::decay_t<decltype(g)>, BigRational>) {
              gens.push_back(to_string(g));
            } else {
              gens.push_back(g.to_string());
            }
          }
        },
        c.generators);
    node["generators"] = gens;
    json places = json::array();
    if (c.kind() == FieldKind::NumberFieldMatrices) {
      places.push_back("embedding");
    } else {
      for (const auto& p : c.places) places.push_back(place_label(p));
    }
    node["places"] = places;
    node["multiplicity"] = c.multiplicity;
    if (c.allow_bounded_places) node["allow_bounded_places"] = true;
    root["components"].push_back(node);
  }
  return root.dump(2) + "\n";
}

}  // namespace zdyn
