#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ttg/errors.hpp"
#include "ttg/map.hpp"
#include "ttg/space.hpp"

namespace ttg {

using nlohmann::json;

// JSON schema for a space:
//   {"points":[{"id":"a"},...], "specializations":[["a","b"],...]}
// where ["a","b"] means a specializes to b. The relation is closed
// reflexively and transitively on load. Emission is byte-stable: points are
// sorted by id and only the covering pairs are written, sorted.
//
// JSON schema for a map:
//   {"domain":<space>, "codomain":<space>, "assignment":{"a":"x",...}}

inline FiniteSpectralSpace space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points"))
    throw InputError("space JSON must be an object with a 'points' array");
  std::vector<std::string> points;
  for (const auto& p : j.at("points")) {
    if (p.is_string())
      points.push_back(p.get<std::string>());
    else if (p.is_object() && p.contains("id"))
      points.push_back(p.at("id").get<std::string>());
    else
      throw InputError("each point must be a string or an object with an 'id'");
  }
  std::vector<std::pair<std::string, std::string>> specializations;
  if (j.contains("specializations")) {
    for (const auto& e : j.at("specializations")) {
      if (!e.is_array() || e.size() != 2)
        throw InputError("each specialization must be a pair [from, to]");
      specializations.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
  }
  return FiniteSpectralSpace(std::move(points), specializations);
}

inline json space_to_json(const FiniteSpectralSpace& s, json annotations = json::object()) {
  std::vector<std::string> order(s.ids());
  std::sort(order.begin(), order.end());
  json points = json::array();
  for (const auto& id : order) points.push_back(json{{"id", id}});
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [x, y] : s.covering_pairs()) covers.emplace_back(s.id(x), s.id(y));
  std::sort(covers.begin(), covers.end());
  json spec = json::array();
  for (const auto& [a, b] : covers) spec.push_back(json::array({a, b}));
  json out{{"points", std::move(points)}, {"specializations", std::move(spec)}};
  for (auto& [key, value] : annotations.items()) out[key] = value;
  return out;
}

inline SpectralMapData map_from_json(const json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") ||
      !j.contains("assignment"))
    throw InputError("map JSON must contain 'domain', 'codomain' and 'assignment'");
  auto domain = space_from_json(j.at("domain"));
  auto codomain = space_from_json(j.at("codomain"));
  std::map<std::string, std::string> assignment;
  for (auto& [key, value] : j.at("assignment").items())
    assignment[key] = value.get<std::string>();
  return SpectralMapData(std::move(domain), std::move(codomain), assignment);
}

inline json map_to_json(const SpectralMapData& m, json annotations = json::object()) {
  json assignment = json::object();
  std::vector<std::string> order(m.domain().ids());
  std::sort(order.begin(), order.end());
  for (const auto& id : order)
    assignment[id] = m.codomain().id(m(m.domain().index(id)));
  json out{{"domain", space_to_json(m.domain())},
           {"codomain", space_to_json(m.codomain())},
           {"assignment", std::move(assignment)}};
  for (auto& [key, value] : annotations.items()) out[key] = value;
  return out;
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

// Hasse diagram of the covering relation. Edges are drawn upward toward
// closed points: rankdir=BT puts generic points at the bottom.
inline std::string space_to_dot(const FiniteSpectralSpace& s,
                                const std::string& graph_name = "space") {
  std::ostringstream out;
  out << "digraph \"" << detail::dot_escape(graph_name) << "\" {\n";
  out << "  rankdir=BT;\n  node [shape=circle, fontsize=11];\n";
  std::vector<std::string> order(s.ids());
  std::sort(order.begin(), order.end());
  for (const auto& id : order) out << "  \"" << detail::dot_escape(id) << "\";\n";
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [x, y] : s.covering_pairs()) covers.emplace_back(s.id(x), s.id(y));
  std::sort(covers.begin(), covers.end());
  for (const auto& [a, b] : covers)
    out << "  \"" << detail::dot_escape(a) << "\" -> \"" << detail::dot_escape(b)
        << "\";\n";
  out << "}\n";
  return out.str();
}

// Domain and codomain as clusters, with the assignment in gray.
inline std::string map_to_dot(const SpectralMapData& m,
                              const std::string& graph_name = "map") {
  std::ostringstream out;
  out << "digraph \"" << detail::dot_escape(graph_name) << "\" {\n";
  out << "  rankdir=BT;\n  node [shape=circle, fontsize=11];\n";
  auto emit_cluster = [&](const FiniteSpectralSpace& s, const std::string& cluster,
                          const std::string& prefix) {
    out << "  subgraph cluster_" << cluster << " {\n    label=\"" << cluster
        << "\";\n";
    std::vector<std::string> order(s.ids());
    std::sort(order.begin(), order.end());
    for (const auto& id : order)
      out << "    \"" << prefix << detail::dot_escape(id) << "\" [label=\""
          << detail::dot_escape(id) << "\"];\n";
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto [x, y] : s.covering_pairs()) covers.emplace_back(s.id(x), s.id(y));
    std::sort(covers.begin(), covers.end());
    for (const auto& [a, b] : covers)
      out << "    \"" << prefix << detail::dot_escape(a) << "\" -> \"" << prefix
          << detail::dot_escape(b) << "\";\n";
    out << "  }\n";
  };
  emit_cluster(m.domain(), "domain", "d:");
  emit_cluster(m.codomain(), "codomain", "c:");
  std::vector<std::string> order(m.domain().ids());
  std::sort(order.begin(), order.end());
  for (const auto& id : order)
    out << "  \"d:" << detail::dot_escape(id) << "\" -> \"c:"
        << detail::dot_escape(m.codomain().id(m(m.domain().index(id))))
        << "\" [color=gray, style=dashed, constraint=false];\n";
  out << "}\n";
  return out.str();
}

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ttg
