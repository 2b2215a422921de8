#ifndef AMPCYL_CASES_HPP
#define AMPCYL_CASES_HPP

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ampcyl/contraction.hpp"
#include "ampcyl/errors.hpp"
#include "ampcyl/lattice.hpp"
#include "ampcyl/rational.hpp"
#include "ampcyl/surface.hpp"

namespace ampcyl {

inline const std::vector<std::string>& known_types() {
  static const std::vector<std::string> types{
      "A4+A2+A1", "A4+A3", "A5+2A1", "A5+A2", "A6+A1", "A7'",  "A7''",
      "D5+2A1",   "D5+A2", "D6+A1",  "D7",    "E6+A1", "E7"};
  return types;
}

// "A7'" -> "A7p", "A7''" -> "A7pp".
inline std::string file_stem(const std::string& type) {
  std::string out;
  for (char c : type) out += c == '\'' ? std::string("p") : std::string(1, c);
  return out;
}

struct NamedClass {
  std::string name;
  DivisorClass cls;
  bool operator==(const NamedClass&) const = default;
};

struct Cylinder {
  std::string name;
  std::vector<std::string> boundary;
  bool operator==(const Cylinder&) const = default;
};

using CylinderSet = std::vector<std::string>;

struct Expected {
  std::vector<CylinderSet> covering_sets;
  std::vector<CylinderSet> insufficient_sets;
  bool operator==(const Expected&) const = default;
};

struct CaseFile {
  std::string type_label;
  int ambient_n = 0;
  Morphism morphism = Morphism::F;
  std::vector<NamedClass> lines;
  Rank2Basis basis;
  std::vector<PullbackDatum> pullbacks;
  std::vector<PushedClass> pushforwards;
  std::vector<PushedClass> aux_classes;
  std::vector<std::string> mori_generators;
  std::vector<Vec2> printed_inequalities;
  std::vector<Cylinder> cylinders;
  Expected expected;

  bool operator==(const CaseFile&) const = default;

  BlowupLattice lattice() const { return {ambient_n}; }

  std::optional<PushedClass> find_class(const std::string& name) const {
    for (const auto& p : pushforwards)
      if (p.name == name) return p;
    for (const auto& p : aux_classes)
      if (p.name == name) return p;
    if (name == basis.names()[0]) return PushedClass{name, {1, 0}};
    if (name == basis.names()[1]) return PushedClass{name, {0, 1}};
    return std::nullopt;
  }

  PushedClass resolve(const std::string& name) const {
    auto c = find_class(name);
    if (!c) throw UnknownClassName("'" + name + "' in case " + type_label);
    return *c;
  }

  const Cylinder& cylinder(const std::string& name) const {
    for (const auto& c : cylinders)
      if (c.name == name) return c;
    throw UnknownCylinder("'" + name + "' in case " + type_label);
  }

  std::vector<PushedClass> mori_classes() const {
    std::vector<PushedClass> out;
    for (const auto& n : mori_generators) out.push_back(resolve(n));
    return out;
  }
};

namespace detail {

using json = nlohmann::ordered_json;

inline void require_fields(const json& j, const std::string& where,
                           std::initializer_list<const char*> required,
                           std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  for (const char* k : required)
    if (!j.contains(k)) throw SchemaError(where + ": missing field '" + k + "'");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& k = it.key();
    bool known = std::any_of(required.begin(), required.end(), [&](const char* r) { return k == r; }) ||
                 std::any_of(optional.begin(), optional.end(), [&](const char* r) { return k == r; });
    if (!known) throw SchemaError(where + ": unknown field '" + k + "'");
  }
}

inline const json& array_at(const json& j, const char* key, const std::string& where) {
  const json& a = j.at(key);
  if (!a.is_array()) throw SchemaError(where + ": '" + key + "' must be an array");
  return a;
}

inline std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where + " must be a string");
  return j.get<std::string>();
}

inline Rational rat(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where + " must be a rational written as a string");
  return parse_rational(j.get<std::string>());
}

inline Vec2 pair_of(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(where + " must be a pair");
  return {rat(j[0], where), rat(j[1], where)};
}

inline std::vector<std::string> names(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + " must be a list of names");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(str(x, where));
  return out;
}

inline std::vector<PushedClass> class_map(const json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  std::vector<PushedClass> out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out.push_back({it.key(), pair_of(it.value(), where + "." + it.key())});
  return out;
}

inline json rat_json(const Rational& q) { return to_string(q); }

inline json pair_json(const Vec2& v) { return json::array({rat_json(v[0]), rat_json(v[1])}); }

} // namespace detail

inline CaseFile load_case(std::string_view text) {
  using detail::json;
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  CaseFile c;
  try {
    detail::require_fields(j, "case",
                           {"type", "ambient_n", "morphism", "lines", "basis", "pushforwards",
                            "mori_generators", "cylinders", "expected"},
                           {"pullbacks", "aux_classes", "printed_inequalities"});
    c.type_label = detail::str(j["type"], "type");
    const auto& types = known_types();
    if (std::find(types.begin(), types.end(), c.type_label) == types.end())
      throw SchemaError("type '" + c.type_label + "' is not one of the 13 supported types");
    if (!j["ambient_n"].is_number_integer() || j["ambient_n"].get<int>() < 0)
      throw SchemaError("ambient_n must be a nonnegative integer");
    c.ambient_n = j["ambient_n"].get<int>();
    std::string m = detail::str(j["morphism"], "morphism");
    if (m == "f") c.morphism = Morphism::F;
    else if (m == "f∘g") c.morphism = Morphism::FG;
    else throw SchemaError("morphism must be \"f\" or \"f∘g\"");

    const BlowupLattice lat{c.ambient_n};
    std::set<std::string> line_names;
    for (const auto& l : detail::array_at(j, "lines", "case")) {
      detail::require_fields(l, "line", {"name", "coords"});
      std::string name = detail::str(l["name"], "line name");
      if (!line_names.insert(name).second) throw SchemaError("duplicate line '" + name + "'");
      const auto& cj = l["coords"];
      if (!cj.is_array() || cj.size() != static_cast<std::size_t>(lat.rank()))
        throw SchemaError("line " + name + ": coords must have " + std::to_string(lat.rank()) +
                          " entries");
      Vector v;
      for (const auto& x : cj) v.push_back(detail::rat(x, "line " + name));
      c.lines.push_back({name, DivisorClass(lat, std::move(v))});
    }

    const auto& b = j["basis"];
    detail::require_fields(b, "basis", {"names", "gram"});
    auto bn = detail::names(b["names"], "basis.names");
    if (bn.size() != 2 || bn[0] == bn[1]) throw SchemaError("basis.names must be two distinct labels");
    const auto& g = b["gram"];
    if (!g.is_array() || g.size() != 2) throw SchemaError("basis.gram must be 2x2");
    Matrix2 gram;
    for (int r = 0; r < 2; ++r) {
      Vec2 row = detail::pair_of(g[r], "basis.gram row");
      gram[r] = {row[0], row[1]};
    }
    c.basis = Rank2Basis({bn[0], bn[1]}, gram);

    if (j.contains("pullbacks")) {
      for (const auto& p : detail::array_at(j, "pullbacks", "case")) {
        detail::require_fields(p, "pullback", {"target", "strict_pairings", "coefficients"});
        PullbackDatum d;
        d.target = detail::str(p["target"], "pullback target");
        if (d.target != bn[0] && d.target != bn[1])
          throw ReferenceError("pullback target '" + d.target + "' is not a basis class");
        const auto& sp = p["strict_pairings"];
        detail::require_fields(sp, "strict_pairings", {"self", "cross", "other_self"});
        d.strict_self = detail::rat(sp["self"], "strict_pairings.self");
        d.strict_cross = detail::rat(sp["cross"], "strict_pairings.cross");
        d.strict_other_self = detail::rat(sp["other_self"], "strict_pairings.other_self");
        if (!p["coefficients"].is_object()) throw SchemaError("pullback coefficients must be an object");
        for (auto it = p["coefficients"].begin(); it != p["coefficients"].end(); ++it) {
          Rational v = detail::rat(it.value(), "coefficient " + it.key());
          if (v < 0) throw SchemaError("pullback coefficient of " + it.key() + " is negative");
          d.coefficients.emplace_back(it.key(), v);
        }
        c.pullbacks.push_back(std::move(d));
      }
      if (c.pullbacks.size() != 2 || c.pullbacks[0].target != bn[0] || c.pullbacks[1].target != bn[1])
        throw SchemaError("pullbacks must list the two basis classes in basis order");
      const auto& p0 = c.pullbacks[0];
      const auto& p1 = c.pullbacks[1];
      if (p0.strict_self != p1.strict_other_self || p0.strict_other_self != p1.strict_self ||
          p0.strict_cross != p1.strict_cross)
        throw SchemaError("the two pullbacks disagree on strict pairings");
    }

    c.pushforwards = detail::class_map(j["pushforwards"], "pushforwards");
    for (const auto& p : c.pushforwards)
      if (!line_names.count(p.name))
        throw ReferenceError("pushforward of unknown line '" + p.name + "'");
    if (j.contains("aux_classes")) c.aux_classes = detail::class_map(j["aux_classes"], "aux_classes");
    for (const auto& a : c.aux_classes)
      if (line_names.count(a.name) || a.name == bn[0] || a.name == bn[1])
        throw SchemaError("auxiliary class '" + a.name + "' shadows another name");

    c.mori_generators = detail::names(j["mori_generators"], "mori_generators");
    for (const auto& n : c.mori_generators)
      if (!c.find_class(n)) throw ReferenceError("Mori generator '" + n + "' does not resolve");

    if (j.contains("printed_inequalities"))
      for (const auto& p : detail::array_at(j, "printed_inequalities", "case"))
        c.printed_inequalities.push_back(detail::pair_of(p, "printed inequality"));

    std::set<std::string> cyl_names;
    for (const auto& cy : detail::array_at(j, "cylinders", "case")) {
      detail::require_fields(cy, "cylinder", {"name", "boundary"});
      Cylinder u{detail::str(cy["name"], "cylinder name"), detail::names(cy["boundary"], "boundary")};
      if (!cyl_names.insert(u.name).second) throw SchemaError("duplicate cylinder '" + u.name + "'");
      for (const auto& n : u.boundary)
        if (!c.find_class(n))
          throw ReferenceError("cylinder " + u.name + " boundary '" + n + "' does not resolve");
      c.cylinders.push_back(std::move(u));
    }

    const auto& e = j["expected"];
    detail::require_fields(e, "expected", {"covering_sets", "insufficient_sets"});
    auto sets = [&](const json& a, const char* what) {
      if (!a.is_array()) throw SchemaError(std::string("expected.") + what + " must be a list");
      std::vector<CylinderSet> out;
      for (const auto& s : a) {
        auto set = detail::names(s, std::string("expected.") + what);
        for (const auto& n : set)
          if (!cyl_names.count(n)) throw ReferenceError("expected set names unknown cylinder '" + n + "'");
        out.push_back(std::move(set));
      }
      return out;
    };
    c.expected.covering_sets = sets(e["covering_sets"], "covering_sets");
    c.expected.insufficient_sets = sets(e["insufficient_sets"], "insufficient_sets");
  } catch (const json::exception& ex) {
    throw SchemaError(ex.what());
  }
  return c;
}

inline std::string serialize_case(const CaseFile& c) {
  using detail::json;
  json j;
  j["type"] = c.type_label;
  j["ambient_n"] = c.ambient_n;
  j["morphism"] = to_string(c.morphism);
  j["lines"] = json::array();
  for (const auto& l : c.lines) {
    json coords = json::array();
    for (const auto& x : l.cls.coords()) coords.push_back(detail::rat_json(x));
    json line;
    line["name"] = l.name;
    line["coords"] = coords;
    j["lines"].push_back(line);
  }
  const auto& g = c.basis.gram();
  j["basis"]["names"] = json::array({c.basis.names()[0], c.basis.names()[1]});
  j["basis"]["gram"] =
      json::array({detail::pair_json({g[0][0], g[0][1]}), detail::pair_json({g[1][0], g[1][1]})});
  if (!c.pullbacks.empty()) {
    j["pullbacks"] = json::array();
    for (const auto& p : c.pullbacks) {
      json coeffs = json::object();
      for (const auto& [k, v] : p.coefficients) coeffs[k] = detail::rat_json(v);
      json d;
      d["target"] = p.target;
      d["strict_pairings"]["self"] = detail::rat_json(p.strict_self);
      d["strict_pairings"]["cross"] = detail::rat_json(p.strict_cross);
      d["strict_pairings"]["other_self"] = detail::rat_json(p.strict_other_self);
      d["coefficients"] = coeffs;
      j["pullbacks"].push_back(d);
    }
  }
  j["pushforwards"] = json::object();
  for (const auto& p : c.pushforwards) j["pushforwards"][p.name] = detail::pair_json(p.coords);
  j["aux_classes"] = json::object();
  for (const auto& p : c.aux_classes) j["aux_classes"][p.name] = detail::pair_json(p.coords);
  j["mori_generators"] = c.mori_generators;
  j["printed_inequalities"] = json::array();
  for (const auto& p : c.printed_inequalities) j["printed_inequalities"].push_back(detail::pair_json(p));
  j["cylinders"] = json::array();
  for (const auto& u : c.cylinders) {
    json cy;
    cy["name"] = u.name;
    cy["boundary"] = u.boundary;
    j["cylinders"].push_back(cy);
  }
  j["expected"]["covering_sets"] = c.expected.covering_sets;
  j["expected"]["insufficient_sets"] = c.expected.insufficient_sets;
  return j.dump(2);
}

} // namespace ampcyl

#endif // AMPCYL_CASES_HPP
