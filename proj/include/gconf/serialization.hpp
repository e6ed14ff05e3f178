#pragma once

#include <gconf/homology.hpp>
#include <gconf/presheaf_complex.hpp>
#include <gconf/simplicial.hpp>

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace gconf {

using Json = nlohmann::json;

/// Integers that fit in 64 bits are written as JSON numbers, larger ones as
/// decimal strings; both forms are accepted when reading.
inline Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("not an integer: " + j.dump());
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

namespace detail {
inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "' in " + j.dump().substr(0, 80));
  return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad ") + what + ": " + e.what());
  }
}
}  // namespace detail

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

inline Graph graph_from_json(const Json& j) {
  int n = detail::get_as<int>(detail::field(j, "n"), "vertex count");
  auto edges = detail::get_as<std::vector<std::pair<int, int>>>(detail::field(j, "edges"), "edge list");
  for (auto [a, b] : edges)
    if (a >= b) throw ParseError("edges must be written [i, j] with i < j");
  return Graph(n, edges);
}

inline Json to_json(const SimplicialComplex& x) {
  return {{"vertex_count", x.vertex_count()}, {"facets", x.facets()}};
}

inline SimplicialComplex simplicial_complex_from_json(const Json& j) {
  return SimplicialComplex(detail::get_as<int>(detail::field(j, "vertex_count"), "vertex_count"),
                           detail::get_as<std::vector<Simplex>>(detail::field(j, "facets"), "facets"));
}

inline Json to_json(const PresheafComplex& c) {
  Json degrees = Json::array();
  for (const auto& basis : c.degrees()) {
    Json list = Json::array();
    for (const auto& g : basis) list.push_back(to_json(g));
    degrees.push_back(list);
  }
  Json diffs = Json::array();
  for (std::size_t d = 0; d < c.differentials().size(); ++d) {
    Json entries = Json::array();
    for (const auto& t : c.differential(d).entries())
      entries.push_back({t.row, t.col, integer_to_json(t.value)});
    diffs.push_back({{"rows", d + 1}, {"cols", d}, {"entries", entries}});
  }
  return {{"n", c.vertex_count()}, {"degrees", degrees}, {"differentials", diffs}};
}

inline PresheafComplex presheaf_complex_from_json(const Json& j) {
  int n = detail::get_as<int>(detail::field(j, "n"), "vertex count");
  std::vector<std::vector<Graph>> degrees;
  const Json& jd = detail::field(j, "degrees");
  if (!jd.is_array()) throw ParseError("'degrees' must be an array");
  for (const auto& basis : jd) {
    if (!basis.is_array()) throw ParseError("each degree must be an array of graphs");
    degrees.emplace_back();
    for (const auto& g : basis) {
      degrees.back().push_back(graph_from_json(g));
      if (degrees.back().back().vertex_count() != n)
        throw ParseError("generator graph on the wrong number of vertices");
    }
  }
  std::vector<std::vector<Triplet>> entries(degrees.empty() ? 0 : degrees.size() - 1);
  if (j.contains("differentials")) {
    for (const auto& m : j.at("differentials")) {
      auto rows = detail::get_as<std::size_t>(detail::field(m, "rows"), "rows");
      auto cols = detail::get_as<std::size_t>(detail::field(m, "cols"), "cols");
      if (rows != cols + 1 || cols >= entries.size())
        throw ParseError("differential from degree " + std::to_string(rows) + " to " +
                         std::to_string(cols) + " does not fit the degrees");
      for (const auto& e : detail::field(m, "entries")) {
        if (!e.is_array() || e.size() != 3) throw ParseError("entries are [row, col, value]");
        entries[cols].push_back({detail::get_as<std::size_t>(e[0], "row"),
                                 detail::get_as<std::size_t>(e[1], "col"), integer_from_json(e[2])});
      }
    }
  }
  std::vector<LabeledMatrix> diffs;
  for (std::size_t d = 0; d < entries.size(); ++d)
    diffs.emplace_back(degrees[d + 1], degrees[d], std::move(entries[d]));
  return PresheafComplex(n, std::move(degrees), std::move(diffs));
}

inline Json to_json(const HomologySummary& h) {
  Json torsion = Json::array();
  for (const auto& t : h.torsion) torsion.push_back(integer_to_json(t));
  return {{"degree", h.degree}, {"betti", h.betti}, {"torsion", torsion}, {"group", format_group(h)}};
}

inline Json to_json(const std::vector<HomologySummary>& hs) {
  Json out = Json::array();
  for (const auto& h : hs) out.push_back(to_json(h));
  return out;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace gconf
