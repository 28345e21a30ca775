#pragma once

#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "emax/embedding.hpp"
#include "emax/error.hpp"

namespace emax {

// Scheme document:
//   { "n": int,
//     "edges": [[u, v, sig], ...],
//     "rotation": [ [[edge_id, end], ...] per vertex ] }
// Rotation order is semantic and written as stored.

inline nlohmann::ordered_json scheme_to_json(const PseudoEmbedding& e) {
  nlohmann::ordered_json doc;
  doc["n"] = e.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& ed : e.edges()) edges.push_back({ed.u, ed.v, ed.signature});
  doc["edges"] = std::move(edges);
  auto rotation = nlohmann::ordered_json::array();
  for (const auto& rot : e.rotations()) {
    auto darts = nlohmann::ordered_json::array();
    for (const Dart& d : rot) darts.push_back({d.edge, d.end});
    rotation.push_back(std::move(darts));
  }
  doc["rotation"] = std::move(rotation);
  return doc;
}

namespace detail {

inline int json_int(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<int>();
}

}  // namespace detail

inline PseudoEmbedding scheme_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("scheme: top level must be an object");
  for (const char* key : {"n", "edges", "rotation"}) {
    if (!doc.contains(key)) throw InputError(std::string("scheme: missing key '") + key + "'");
  }
  const int n = detail::json_int(doc["n"], "n");
  const auto& jedges = doc["edges"];
  if (!jedges.is_array()) throw InputError("edges: expected an array");
  std::vector<EmbeddedEdge> edges;
  for (std::size_t i = 0; i < jedges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const auto& item = jedges[i];
    if (!item.is_array() || item.size() != 3) throw InputError(where + ": expected [u, v, sig]");
    edges.push_back({detail::json_int(item[0], where + "[0]"), detail::json_int(item[1], where + "[1]"),
                     detail::json_int(item[2], where + "[2]")});
  }
  const auto& jrot = doc["rotation"];
  if (!jrot.is_array()) throw InputError("rotation: expected an array");
  std::vector<std::vector<Dart>> rotation;
  for (std::size_t v = 0; v < jrot.size(); ++v) {
    const std::string where = "rotation[" + std::to_string(v) + "]";
    if (!jrot[v].is_array()) throw InputError(where + ": expected an array of darts");
    std::vector<Dart> rot;
    for (std::size_t i = 0; i < jrot[v].size(); ++i) {
      const std::string at = where + "[" + std::to_string(i) + "]";
      const auto& d = jrot[v][i];
      if (!d.is_array() || d.size() != 2) throw InputError(at + ": expected [edge_id, end]");
      rot.push_back({detail::json_int(d[0], at + "[0]"), detail::json_int(d[1], at + "[1]")});
    }
    rotation.push_back(std::move(rot));
  }
  return PseudoEmbedding(n, std::move(edges), std::move(rotation));
}

inline PseudoEmbedding read_scheme(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("scheme JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return scheme_from_json(doc);
}

inline void write_scheme(std::ostream& out, const PseudoEmbedding& e) { out << scheme_to_json(e).dump() << '\n'; }

}  // namespace emax
