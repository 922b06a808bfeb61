#include "cy4/io.hpp"

#include <fstream>
#include <sstream>

#include "cy4/errors.hpp"

namespace cy4 {

Json to_json(const TChar& c) {
  Json out = Json::array();
  for (const auto& [w, n] : c.terms()) out.push_back({{"w", w}, {"mult", n}});
  return out;
}

Json to_json(const Series2& s) {
  Json coeffs = Json::array();
  for (const auto& [k, v] : s.coeffs()) coeffs.push_back({{"q", k.first}, {"y", k.second}, {"value", to_string(v)}});
  return {{"q_order", s.q_order()}, {"y_order", s.y_order()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const GVTable& t) {
  Json entries = Json::array();
  if (t.kind == GVKind::MEETING) {
    for (const auto& [k, v] : t.pairs) entries.push_back({{"b1", k.first}, {"b2", k.second}, {"value", to_string(v)}});
  } else {
    for (const auto& [d, v] : t.entries) entries.push_back({{"d", d}, {"value", to_string(v)}});
  }
  return {{"kind", to_string(t.kind)}, {"entries", std::move(entries)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected an integer or a rational string, got " + j.dump());
}

namespace {

int positive_degree(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw ParseError(std::string("missing integer field '") + key + "'");
  int d = j[key].get<int>();
  if (d < 1) throw InvalidInput(std::string("field '") + key + "' must be at least 1");
  return d;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j[key];
}

}  // namespace

GVTable gv_table_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw ParseError("table kind must be a string");
  auto k = parse_gv_kind(kind.get<std::string>());
  if (!k) throw ParseError("unknown table kind '" + kind.get<std::string>() + "'");
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("table entries must be an array");
  GVTable t{*k, {}, {}};
  for (const Json& e : entries) {
    Rational v = rational_from_json(field(e, "value"));
    if (*k == GVKind::MEETING) {
      std::pair<int, int> key{positive_degree(e, "b1"), positive_degree(e, "b2")};
      if (!t.pairs.emplace(key, v).second) throw InvalidInput("duplicate meeting entry");
      if (v == 0) t.pairs.erase(key);
    } else {
      int d = positive_degree(e, "d");
      if (!t.entries.emplace(d, v).second) throw InvalidInput("duplicate degree " + std::to_string(d));
      if (v == 0) t.entries.erase(d);
    }
  }
  return t;
}

std::vector<ClassData> classes_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("classes must be a JSON array");
  std::vector<ClassData> out;
  for (const Json& c : j) {
    ClassData d;
    const Json& omega = field(c, "omega_beta");
    if (!omega.is_number_integer()) throw ParseError("omega_beta must be an integer");
    d.omega_beta = omega.get<long>();
    if (d.omega_beta < 1) throw InvalidInput("omega_beta must be at least 1");
    Rational n0 = rational_from_json(field(c, "n0D"));
    if (n0.get_den() != 1) throw InvalidInput("n0D must be an integer");
    d.n0D = n0.get_num();
    d.n1X = c.contains("n1X") ? rational_from_json(c["n1X"]) : Rational(0);
    d.degree = c.contains("degree") ? positive_degree(c, "degree") : 1;
    out.push_back(std::move(d));
  }
  return out;
}

Chamber parse_chamber(std::string_view text) {
  if (text == "inf" || text == "infinity") return Chamber::infinity();
  return Chamber::at(parse_rational(text));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace cy4
