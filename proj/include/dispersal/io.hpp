#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dispersal/bounds.hpp"
#include "dispersal/errors.hpp"
#include "dispersal/graph.hpp"
#include "dispersal/labelling.hpp"
#include "dispersal/solver.hpp"

namespace dispersal {

using json = nlohmann::json;

// Graph files: {"edges":[[u,v],...],"n":N} with u < v and edges sorted
// lexicographically, plus an optional "name". The writer always emits this
// canonical form, so canonical files round-trip byte-for-byte.

inline json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.n;
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  if (!g.name.empty()) j["name"] = g.name;
  return j;
}

inline Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw input_error("graph JSON needs fields \"n\" and \"edges\"");
  if (!j["n"].is_number_integer())
    throw input_error("graph field \"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (!j["edges"].is_array())
    throw input_error("graph field \"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw input_error("each edge must be a pair of vertex ids");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string())
      throw input_error("graph field \"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  return make_graph(n, edges, std::move(name));
}

// Labelling files: {"n":N,"order":[v1,...,vN]} where order[i-1] is the
// vertex carrying label i.

inline json labelling_to_json(const Labelling& lab) {
  json j;
  j["n"] = lab.n();
  j["order"] = lab.order;
  return j;
}

inline Labelling labelling_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("order"))
    throw input_error("labelling JSON needs fields \"n\" and \"order\"");
  if (!j["n"].is_number_integer() || !j["order"].is_array())
    throw input_error("labelling fields have the wrong types");
  Labelling lab;
  for (const auto& v : j["order"]) {
    if (!v.is_number_integer())
      throw input_error("labelling order must hold integers");
    lab.order.push_back(v.get<int>());
  }
  validate_labelling(lab, j["n"].get<int>());
  return lab;
}

inline json dispersion_to_json(const DispersionResult& d) {
  json j;
  j["linear_k"] = d.linear_k;
  j["linear_argmin"] = json::array({d.linear_argmin.first, d.linear_argmin.second});
  j["circular_k"] = d.circular_k;
  j["circular_argmin"] =
      json::array({d.circular_argmin.first, d.circular_argmin.second});
  return j;
}

inline json solve_result_to_json(const SolveResult& r) {
  json j;
  j["value"] = r.value;
  j["witness"] = labelling_to_json(r.witness);
  j["explored"] = r.explored;
  return j;
}

/// Bounds are serialized by hand: every number is an exact integer except
/// the degree bound's raw value, fixed at 9 decimals. Absent bounds are
/// null.
inline std::string bounds_report_to_json_string(const BoundsReport& rep) {
  std::ostringstream out;
  out << "{\"best_lower\":" << rep.best_lower
      << ",\"best_upper\":" << rep.best_upper << ",\"degree_lower\":";
  if (rep.degree_lower) {
    char raw[64];
    std::snprintf(raw, sizeof raw, "%.9f", rep.degree_lower->raw);
    out << "{\"raw\":" << raw << ",\"value\":" << rep.degree_lower->value
        << "}";
  } else {
    out << "null";
  }
  out << ",\"dirac_lower\":";
  if (rep.dirac_lower)
    out << *rep.dirac_lower;
  else
    out << "null";
  out << ",\"radius_upper\":" << rep.radius_upper << ",\"ue_upper\":";
  if (rep.ue_upper)
    out << *rep.ue_upper;
  else
    out << "null";
  out << "}";
  return out.str();
}

inline std::string bounds_report_to_table(const BoundsReport& rep) {
  auto cell = [](std::optional<int> v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  std::ostringstream out;
  out << "bound            kind   value\n";
  out << "radius           upper  " << rep.radius_upper << "\n";
  out << "unique-eccentric upper  " << cell(rep.ue_upper) << "\n";
  out << "dirac            lower  " << cell(rep.dirac_lower) << "\n";
  out << "degree           lower  ";
  if (rep.degree_lower) {
    char raw[64];
    std::snprintf(raw, sizeof raw, "%.9f", rep.degree_lower->raw);
    out << rep.degree_lower->value << " (raw " << raw << ")";
  } else {
    out << "-";
  }
  out << "\n";
  out << "best             upper  " << rep.best_upper << "\n";
  out << "best             lower  " << rep.best_lower << "\n";
  return out.str();
}

/// Canonical single-line serializations (trailing newline included);
/// identical input gives identical bytes.
inline std::string graph_to_string(const Graph& g) {
  return graph_to_json(g).dump() + "\n";
}
inline std::string labelling_to_string(const Labelling& lab) {
  return labelling_to_json(lab).dump() + "\n";
}

inline json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed JSON in " + what);
  return j;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << data;
}

inline Graph load_graph(const std::string& path) {
  return graph_from_json(parse_json(read_file(path), path));
}

inline Labelling load_labelling(const std::string& path) {
  return labelling_from_json(parse_json(read_file(path), path));
}

/// DOT export. With a labelling, every vertex is annotated "label/vertex"
/// and filled by label parity, which makes even/odd structure (e.g. the
/// two subtrees of the rooted binary tree) visible at a glance.
inline std::string dot_export(const Graph& g, const Labelling* lab = nullptr) {
  if (lab) validate_labelling(*lab, g.n);
  std::vector<int> label_of;
  if (lab) {
    label_of.assign(g.n, 0);
    for (int i = 0; i < g.n; ++i) label_of[lab->order[i]] = i + 1;
  }
  std::ostringstream out;
  out << "graph \"" << (g.name.empty() ? "G" : g.name) << "\" {\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < g.n; ++v) {
    if (lab) {
      const char* color = label_of[v] % 2 == 0 ? "lightblue" : "lightyellow";
      out << "  " << v << " [label=\"" << label_of[v] << "\", xlabel=\"v" << v
          << "\", style=filled, fillcolor=" << color << "];\n";
    } else {
      out << "  " << v << ";\n";
    }
  }
  for (const auto& [u, v] : g.edges())
    out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace dispersal
