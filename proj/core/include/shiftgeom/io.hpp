#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "shiftgeom/approximation.hpp"
#include "shiftgeom/automaton.hpp"
#include "shiftgeom/complex.hpp"
#include "shiftgeom/presentation.hpp"
#include "shiftgeom/shifts.hpp"

namespace shiftgeom {

using Json = nlohmann::json;

/// Throws InputError when the file is missing or not valid JSON.
Json load_json_file(const std::string& path);

// Presentation: {"alphabet": "01", "states": [...], "edges": [{"from", "to", "label"}], "anchors": [...]}
// SFT:          {"alphabet": "01", "forbidden": ["11"]}
ShiftPresentation presentation_from_json(const Json& j);
Json to_json(const ShiftPresentation& x);
SftSpec sft_from_json(const Json& j);
/// Either format; SFTs are compiled.
ShiftPresentation shift_from_json(const Json& j);
/// Shift plus optional "anchors" list of state names.
PointedSet pointed_set_from_json(const Json& j);

// {"alphabet": "01", "offsets": [l, r], "table": {"000": "0", ...}}
CellularAutomaton automaton_from_json(const Json& j);
Json to_json(const CellularAutomaton& f);
/// "eca:N" or a path to an automaton file.
CellularAutomaton load_automaton(const std::string& spec);

// {"vertices": ["a", "b"], "faces": [["a", "b"]]}; faces may also use indices.
AbstractComplex complex_from_json(const Json& j);
Json to_json(const AbstractComplex& k);

}  // namespace shiftgeom
