#include "shiftgeom/io.hpp"

#include <charconv>
#include <fstream>
#include <map>

#include "shiftgeom/errors.hpp"

namespace shiftgeom {
namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("field \"") + key + "\" has the wrong type");
  }
}

std::size_t lookup(const std::map<std::string, std::size_t>& names, const Json& v, std::size_t size) {
  if (v.is_number_unsigned()) {
    auto i = v.get<std::size_t>();
    if (i >= size) throw InputError("index " + std::to_string(i) + " out of range");
    return i;
  }
  if (!v.is_string()) throw InputError("expected a name or an index");
  auto it = names.find(v.get<std::string>());
  if (it == names.end()) throw InputError("unknown name \"" + v.get<std::string>() + "\"");
  return it->second;
}

std::map<std::string, std::size_t> name_index(const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!out.emplace(names[i], i).second) throw InputError("duplicate name \"" + names[i] + "\"");
  }
  return out;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

ShiftPresentation presentation_from_json(const Json& j) {
  Alphabet alphabet(field<std::string>(j, "alphabet"));
  auto states = field<std::vector<std::string>>(j, "states");
  auto names = name_index(states);
  std::vector<Edge> edges;
  for (const auto& e : field<Json>(j, "edges")) {
    auto label = field<std::string>(e, "label");
    if (label.size() != 1) throw InputError("edge label must be a single symbol");
    edges.push_back({lookup(names, e.at("from"), states.size()), lookup(names, e.at("to"), states.size()),
                     alphabet.index(label[0])});
  }
  return ShiftPresentation(std::move(alphabet), std::move(states), std::move(edges));
}

Json to_json(const ShiftPresentation& x) {
  Json edges = Json::array();
  for (const auto& e : x.edges()) {
    edges.push_back({{"from", x.state_names()[e.from]},
                     {"to", x.state_names()[e.to]},
                     {"label", std::string(1, x.alphabet().symbol(e.label))}});
  }
  return {{"alphabet", x.alphabet().symbols()}, {"states", x.state_names()}, {"edges", edges}};
}

SftSpec sft_from_json(const Json& j) {
  Alphabet alphabet(field<std::string>(j, "alphabet"));
  auto forbidden = field<std::vector<std::string>>(j, "forbidden");
  for (const auto& w : forbidden) alphabet.validate(w);
  return {std::move(alphabet), std::move(forbidden)};
}

ShiftPresentation shift_from_json(const Json& j) {
  if (j.is_object() && j.contains("forbidden")) return compile_sft(sft_from_json(j));
  return presentation_from_json(j);
}

PointedSet pointed_set_from_json(const Json& j) {
  ShiftPresentation x = shift_from_json(j);
  if (j.contains("anchors")) return PointedSet(std::move(x), field<std::vector<std::string>>(j, "anchors"));
  return PointedSet(std::move(x));
}

CellularAutomaton automaton_from_json(const Json& j) {
  Alphabet alphabet(field<std::string>(j, "alphabet"));
  auto offsets = field<std::vector<int>>(j, "offsets");
  if (offsets.size() != 2 || offsets[0] > offsets[1]) throw InputError("offsets must be [left, right]");
  auto table = field<std::map<std::string, std::string>>(j, "table");
  const auto width = static_cast<std::size_t>(offsets[1] - offsets[0] + 1);
  for (const auto& [pattern, image] : table) {
    alphabet.validate(pattern);
    alphabet.validate(image);
    if (pattern.size() != width || image.size() != 1) throw InputError("bad table entry \"" + pattern + "\"");
  }
  return CellularAutomaton::from_function(alphabet, offsets[0], offsets[1], [&](std::string_view p) {
    auto it = table.find(std::string(p));
    if (it == table.end()) throw InputError("table has no entry for \"" + std::string(p) + "\"");
    return it->second[0];
  });
}

Json to_json(const CellularAutomaton& f) {
  Json table = Json::object();
  std::size_t size = f.table().size();
  for (std::size_t c = 0; c < size; ++c) table[f.pattern(c)] = std::string(1, f.alphabet().symbol(f.local_index(c)));
  return {{"alphabet", f.alphabet().symbols()}, {"offsets", {f.left(), f.right()}}, {"table", table}};
}

CellularAutomaton load_automaton(const std::string& spec) {
  if (spec.rfind("eca:", 0) == 0) {
    unsigned rule = 0;
    const char* first = spec.data() + 4;
    const char* last = spec.data() + spec.size();
    auto [ptr, ec] = std::from_chars(first, last, rule);
    if (ec != std::errc() || ptr != last || first == last) throw InputError("bad elementary rule \"" + spec + "\"");
    return CellularAutomaton::elementary(rule);
  }
  return automaton_from_json(load_json_file(spec));
}

AbstractComplex complex_from_json(const Json& j) {
  auto vertices = field<std::vector<std::string>>(j, "vertices");
  auto names = name_index(vertices);
  std::vector<Face> faces;
  for (const auto& f : field<Json>(j, "faces")) {
    if (!f.is_array()) throw InputError("each face must be a list");
    Face face;
    for (const auto& v : f) face.push_back(lookup(names, v, vertices.size()));
    faces.push_back(std::move(face));
  }
  return AbstractComplex(std::move(vertices), faces);
}

Json to_json(const AbstractComplex& k) {
  Json faces = Json::array();
  for (const auto& face : k.maximal_faces()) {
    Json names = Json::array();
    for (std::size_t v : face) names.push_back(k.vertices()[v]);
    faces.push_back(names);
  }
  return {{"vertices", k.vertices()}, {"faces", faces}};
}

}  // namespace shiftgeom
