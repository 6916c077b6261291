#include "topomodal/json_io.hpp"

#include <cctype>

#include "json.hpp"
#include "topomodal/errors.hpp"

namespace topomodal {

namespace {

using nlohmann::ordered_json;

ordered_json parse_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports 1-based byte positions.
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(std::string("malformed JSON: ") + e.what(), at);
  }
}

void expect_keys(const ordered_json& obj, const char* what,
                 std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object())
    throw ValidationError(std::string(what) + " must be a JSON object");
  for (const char* key : required)
    if (!obj.contains(key))
      throw ValidationError(std::string(what) + " needs a \"" + key +
                            "\" field");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : required) known = known || key == k;
    for (const char* k : optional) known = known || key == k;
    if (!known)
      throw ValidationError(std::string(what) + " has an unknown field \"" +
                            key + "\"");
  }
}

int int_field(const ordered_json& obj, const char* what, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer())
    throw ValidationError(std::string(what) + " field \"" + key +
                          "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_array(const ordered_json& v, const std::string& what) {
  if (!v.is_array()) throw ValidationError(what + " must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer())
      throw ValidationError(what + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

ordered_json set_to_array(PointSet s) {
  ordered_json arr = ordered_json::array();
  for (int p : set_to_points(s)) arr.push_back(p);
  return arr;
}

ordered_json space_to_value(const Space& s) {
  ordered_json obj;
  obj["n"] = s.point_count();
  obj["opens"] = ordered_json::array();
  for (PointSet o : s.opens()) obj["opens"].push_back(set_to_array(o));
  return obj;
}

Space space_from_value(const ordered_json& v) {
  expect_keys(v, "space", {"n", "opens"});
  const int n = int_field(v, "space", "n");
  if (!v.at("opens").is_array())
    throw ValidationError("space field \"opens\" must be an array");
  std::vector<PointSet> opens;
  for (const auto& o : v.at("opens"))
    opens.push_back(points_to_set(int_array(o, "an open set"), n));
  return Space(n, std::move(opens));
}

// Valuation keys look like p<index> or i<index>.
bool parse_letter(const std::string& key, char& kind, int& index) {
  if (key.size() < 2 || (key[0] != 'p' && key[0] != 'i')) return false;
  for (std::size_t i = 1; i < key.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(key[i]))) return false;
  if (key[1] == '0' && key.size() > 2) return false;  // no leading zeros
  kind = key[0];
  index = std::stoi(key.substr(1));
  return true;
}

}  // namespace

std::string space_to_json(const Space& s) { return space_to_value(s).dump(); }

Space space_from_json(const std::string& text) {
  return space_from_value(parse_text(text));
}

std::string model_to_json(const Model& m) {
  ordered_json obj;
  obj["space"] = space_to_value(m.space());
  ordered_json val = ordered_json::object();
  for (const auto& [k, set] : m.props()) val["p" + std::to_string(k)] = set_to_array(set);
  for (const auto& [k, set] : m.nominals()) val["i" + std::to_string(k)] = set_to_array(set);
  obj["val"] = val;
  return obj.dump();
}

Model model_from_json(const std::string& text) {
  const ordered_json v = parse_text(text);
  expect_keys(v, "model", {"space"}, {"val"});
  Space s = space_from_value(v.at("space"));
  std::map<int, PointSet> props, nominals;
  if (v.contains("val")) {
    const auto& val = v.at("val");
    if (!val.is_object())
      throw ValidationError("model field \"val\" must be an object");
    for (const auto& [key, sets] : val.items()) {
      char kind = 0;
      int index = -1;
      if (!parse_letter(key, kind, index))
        throw ValidationError("valuation key \"" + key +
                              "\" is not of the form p<k> or i<k>");
      const PointSet set =
          points_to_set(int_array(sets, "valuation of " + key), s.point_count());
      (kind == 'p' ? props : nominals)[index] = set;
    }
  }
  return Model(std::move(s), std::move(props), std::move(nominals));
}

std::string algebra_to_json(const InteriorAlgebra& b) {
  ordered_json obj;
  obj["atoms"] = b.atom_count();
  ordered_json box = ordered_json::object();
  for (PointSet a = 0; a <= b.top(); ++a)
    box[set_to_string(a)] = set_to_array(b.box(a));
  obj["box"] = box;
  return obj.dump();
}

InteriorAlgebra algebra_from_json(const std::string& text) {
  const ordered_json v = parse_text(text);
  expect_keys(v, "algebra", {"atoms", "box"});
  const int atoms = int_field(v, "algebra", "atoms");
  if (atoms < 1 || atoms > kMaxPoints)
    throw ValidationError("atom count must be between 1 and " +
                          std::to_string(kMaxPoints) + ", got " +
                          std::to_string(atoms));
  const auto& box = v.at("box");
  if (!box.is_object())
    throw ValidationError("algebra field \"box\" must be an object");
  std::vector<PointSet> table(std::size_t{1} << atoms);
  std::vector<bool> present(table.size(), false);
  for (const auto& [key, value] : box.items()) {
    // Keys are rendered sets; reuse the array path by reparsing.
    ordered_json as_array;
    try {
      as_array = ordered_json::parse(key);
    } catch (const nlohmann::json::parse_error&) {
      throw ValidationError("box key \"" + key +
                            "\" is not a rendered set like [0,1]");
    }
    const PointSet element =
        points_to_set(int_array(as_array, "box key " + key), atoms);
    if (set_to_string(element) != key)
      throw ValidationError("box key \"" + key + "\" is not in sorted form " +
                            set_to_string(element));
    if (present[element])
      throw ValidationError("box key " + key + " appears twice");
    present[element] = true;
    table[element] =
        points_to_set(int_array(value, "box value of " + key), atoms);
  }
  for (std::size_t a = 0; a < table.size(); ++a)
    if (!present[a])
      throw ValidationError("box table misses element " +
                            set_to_string(PointSet(a)));
  return InteriorAlgebra(atoms, std::move(table));
}

}  // namespace topomodal
