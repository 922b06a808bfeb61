#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cy4/characters.hpp"
#include "cy4/gvseries.hpp"
#include "cy4/series.hpp"

namespace cy4 {

using Json = nlohmann::ordered_json;

// [{"w":[w0,w1,w2,w3],"mult":n}, ...]
Json to_json(const TChar& c);
// {"q_order":..,"y_order":..,"coeffs":[{"q":i,"y":j,"value":".."}]}
Json to_json(const Series2& s);
// {"kind":"GV0","entries":[{"d":1,"value":"2875"}]}; MEETING tables use
// {"b1":..,"b2":..,"value":..} entries.
Json to_json(const GVTable& t);

// Integers, or strings holding exact rationals.
Rational rational_from_json(const Json& j);
GVTable gv_table_from_json(const Json& j);
// [{"omega_beta":1,"n0D":2875,"n1X":0}], optional "degree" per class.
std::vector<ClassData> classes_from_json(const Json& j);
// "inf" or an exact rational.
Chamber parse_chamber(std::string_view text);

// Reads and parses a JSON file; ParseError on malformed input.
Json read_json_file(const std::string& path);

}  // namespace cy4
