#pragma once

// JSON and DOT serialization for posets, algebras and validity reports.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "medlat/algebra.hpp"
#include "medlat/error.hpp"
#include "medlat/formula.hpp"
#include "medlat/poset.hpp"
#include "medlat/validity.hpp"

namespace medlat {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Posets: {"name": str, "elements": [labels], "le": [[i, j], ...]}

inline json poset_to_json(const Poset& p) {
  json le = json::array();
  for (auto [i, j] : p.strict_pairs()) le.push_back({i, j});
  return {{"name", p.name()}, {"elements", p.labels()}, {"le", le}};
}

inline Poset poset_from_json(const json& j) {
  try {
    const auto labels = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& pr : j.at("le")) {
      if (!pr.is_array() || pr.size() != 2) throw input_error("each 'le' entry must be a pair [i, j]");
      pairs.emplace_back(pr[0].get<std::size_t>(), pr[1].get<std::size_t>());
    }
    return Poset::from_pairs(labels.size(), pairs, labels, j.value("name", std::string{}));
  } catch (const json::exception& e) {
    throw input_error(std::string("malformed poset JSON: ") + e.what());
  }
}

inline Poset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open poset file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw input_error("poset file " + path + " is not valid JSON: " + e.what());
  }
  return poset_from_json(j);
}

// ---------------------------------------------------------------------------
// Algebras

inline json algebra_to_json(const BrouwerAlgebra& a) {
  const auto m = static_cast<elem>(a.size());
  json le = json::array(), jn = json::array(), mt = json::array(), im = json::array();
  for (elem x = 0; x < m; ++x) {
    json r1 = json::array(), r2 = json::array(), r3 = json::array(), r4 = json::array();
    for (elem y = 0; y < m; ++y) {
      r1.push_back(a.leq(x, y) ? 1 : 0);
      r2.push_back(a.join(x, y));
      r3.push_back(a.meet(x, y));
      r4.push_back(a.imp(x, y));
    }
    le.push_back(std::move(r1));
    jn.push_back(std::move(r2));
    mt.push_back(std::move(r3));
    im.push_back(std::move(r4));
  }
  return {{"size", a.size()},   {"bottom", a.bottom()}, {"top", a.top()},
          {"le", le},           {"join", jn},           {"meet", mt},
          {"imp", im},          {"provenance", a.provenance()},
          {"labels", a.labels()}};
}

/// Inverse of algebra_to_json; table shape is checked, laws are not.
inline AlgebraPtr algebra_from_json(const json& j) {
  try {
    AlgebraTables t;
    t.size = j.at("size").get<std::size_t>();
    t.bottom = j.at("bottom").get<elem>();
    t.top = j.at("top").get<elem>();
    auto flat = [&](const char* key, auto& out) {
      const auto& rows = j.at(key);
      if (rows.size() != t.size) throw input_error(std::string("table '") + key + "' has wrong row count");
      for (const auto& row : rows) {
        if (row.size() != t.size) throw input_error(std::string("table '") + key + "' has a short row");
        for (const auto& v : row) out.push_back(v.get<typename std::decay_t<decltype(out)>::value_type>());
      }
    };
    flat("le", t.leq);
    flat("join", t.join);
    flat("meet", t.meet);
    flat("imp", t.imp);
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return std::make_shared<BrouwerAlgebra>(std::move(t), j.value("provenance", std::string{"json"}),
                                            std::move(labels));
  } catch (const json::exception& e) {
    throw input_error(std::string("malformed algebra JSON: ") + e.what());
  }
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace detail

/// Hasse diagram, drawn bottom to top; meet-irreducibles are boxes.
inline std::string algebra_to_dot(const BrouwerAlgebra& a) {
  const auto m = static_cast<elem>(a.size());
  const auto& irr = a.irreducibles();
  std::ostringstream out;
  out << "digraph algebra {\n  rankdir=BT;\n  label=\"" << detail::dot_escape(a.provenance()) << "\";\n";
  for (elem x = 0; x < m; ++x)
    out << "  n" << x << " [label=\"" << detail::dot_escape(a.label(x)) << "\", shape="
        << (irr.is_meet_irreducible(x) ? "box" : "ellipse") << "];\n";
  for (elem x = 0; x < m; ++x) {
    std::vector<elem> above;
    for (elem y = 0; y < m; ++y)
      if (a.less(x, y)) above.push_back(y);
    for (auto y : above)
      if (std::none_of(above.begin(), above.end(), [&](elem z) { return a.less(z, y); }))
        out << "  n" << x << " -> n" << y << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string poset_to_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t x = 0; x < p.size(); ++x)
    out << "  e" << x << " [label=\"" << detail::dot_escape(p.label(x)) << "\"];\n";
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.less(x, y)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < p.size() && cover; ++z) cover = !(p.less(x, z) && p.less(z, y));
      if (cover) out << "  e" << x << " -> e" << y << ";\n";
    }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Validity reports and fixture lines:
// {"formula": str, "algebra": str, "valid": bool, "countermodel": {...} | null}

inline json countermodel_to_json(const Countermodel& cm, const BrouwerAlgebra& a) {
  json assignment = json::object();
  for (const auto& [var, v] : cm.assignment) assignment[var] = a.label(v);
  return {{"assignment", assignment}, {"value", a.label(cm.value)}};
}

inline json fixture_line(const ValidityReport& r, const BrouwerAlgebra& a) {
  return {{"formula", render(r.formula)},
          {"algebra", r.algebra},
          {"valid", r.valid()},
          {"countermodel", r.countermodel ? countermodel_to_json(*r.countermodel, a) : json(nullptr)}};
}

inline json report_to_json(const ValidityReport& r, const BrouwerAlgebra& a) {
  json j = fixture_line(r, a);
  j["verdict"] = to_string(r.verdict);
  j["valuations_checked"] = r.valuations_checked;
  j["sampled"] = r.sampled;
  return j;
}

}  // namespace medlat
