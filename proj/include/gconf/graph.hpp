#pragma once

#include <gconf/errors.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gconf {

/**
 * A graph on the vertices {1..n}: an irreflexive symmetric relation.
 *
 * Edges are stored as a bitmask whose bit k is the k-th pair in the
 * lexicographic list (1,2), (1,3), ..., (1,n), (2,3), ...  Comparison of
 * graphs with equal n follows the mask, which is the canonical order used
 * by enumerate_graphs.
 */
class Graph {
 public:
  static constexpr int kMaxVertices = 8;  // C(8,2) = 28 slots fit in 32 bits

  Graph() = default;

  explicit Graph(int n) : n_(n) { check_vertex_count(n); }

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [i, j] : edges) mask_ |= bit(i, j);
  }

  static Graph from_mask(int n, std::uint32_t mask) {
    Graph g(n);
    if (n < 32 && slot_count(n) < 32 && (mask >> slot_count(n)) != 0)
      throw InputError("edge mask has bits beyond the " + std::to_string(slot_count(n)) +
                       " edge slots of a graph on " + std::to_string(n) + " vertices");
    g.mask_ = mask;
    return g;
  }

  static int slot_count(int n) { return n * (n - 1) / 2; }

  /// Position of the pair {i,j} in the lexicographic slot list.
  static int slot(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n || i == j)
      throw InputError("invalid edge {" + std::to_string(i) + "," + std::to_string(j) +
                       "} on " + std::to_string(n) + " vertices");
    // pairs starting with a < i: sum_{a=1}^{i-1} (n - a)
    return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
  }

  int vertex_count() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }

  bool has_edge(int i, int j) const { return (mask_ & bit(i, j)) != 0; }

  Graph with_edge(int i, int j) const {
    Graph g = *this;
    g.mask_ |= bit(i, j);
    return g;
  }

  int edge_count() const { return __builtin_popcount(mask_); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;
  friend auto operator<=>(const Graph&, const Graph&) = default;

 private:
  static void check_vertex_count(int n) {
    if (n < 1 || n > kMaxVertices)
      throw InputError("vertex count must lie in 1.." + std::to_string(kMaxVertices) +
                       ", got " + std::to_string(n));
  }

  std::uint32_t bit(int i, int j) const { return std::uint32_t{1} << slot(n_, i, j); }

  int n_ = 0;
  std::uint32_t mask_ = 0;
};

namespace detail {
inline void require_same_n(const Graph& a, const Graph& b, const char* op) {
  if (a.vertex_count() != b.vertex_count())
    throw InputError(std::string(op) + ": graphs on " + std::to_string(a.vertex_count()) +
                     " and " + std::to_string(b.vertex_count()) + " vertices");
}
}  // namespace detail

inline Graph graph_union(const Graph& a, const Graph& b) {
  detail::require_same_n(a, b, "union");
  return Graph::from_mask(a.vertex_count(), a.mask() | b.mask());
}

inline Graph intersect(const Graph& a, const Graph& b) {
  detail::require_same_n(a, b, "intersect");
  return Graph::from_mask(a.vertex_count(), a.mask() & b.mask());
}

/// True iff every edge of `a` is an edge of `b`.
inline bool is_subgraph(const Graph& a, const Graph& b) {
  detail::require_same_n(a, b, "is_subgraph");
  return (a.mask() & ~b.mask()) == 0;
}

inline Graph complete(int n) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  Graph g(n);
  std::uint32_t full = Graph::slot_count(n) == 32 ? ~std::uint32_t{0}
                                                  : (std::uint32_t{1} << Graph::slot_count(n)) - 1;
  return Graph::from_mask(n, full);
}

inline Graph empty_graph(int n) { return Graph(n); }

inline constexpr int kDefaultEnumerationGuard = 5;

/// All 2^C(n,2) graphs on n vertices, in increasing mask order.
inline std::vector<Graph> enumerate_graphs(int n, int guard = kDefaultEnumerationGuard) {
  if (n < 1) throw InputError("enumerate_graphs needs n >= 1");
  if (n > guard)
    throw ResourceError("enumerate_graphs: n = " + std::to_string(n) + " exceeds the guard " +
                        std::to_string(guard) + " (2^" + std::to_string(Graph::slot_count(n)) +
                        " graphs)");
  std::uint32_t count = std::uint32_t{1} << Graph::slot_count(n);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::uint32_t m = 0; m < count; ++m) out.push_back(Graph::from_mask(n, m));
  return out;
}

/// Compact notation: "{12,13}" (vertex digits concatenated), "{}" for no edges.
inline std::string to_string(const Graph& g) {
  std::string s = "{";
  bool first = true;
  for (auto [i, j] : g.edges()) {
    if (!first) s += ",";
    s += std::to_string(i) + std::to_string(j);
    first = false;
  }
  return s + "}";
}

/// Pair labels of an outer tensor product, ordered componentwise.
struct GraphPair {
  Graph first;
  Graph second;
  friend bool operator==(const GraphPair&, const GraphPair&) = default;
  friend auto operator<=>(const GraphPair&, const GraphPair&) = default;
};

inline bool is_subgraph(const GraphPair& a, const GraphPair& b) {
  return is_subgraph(a.first, b.first) && is_subgraph(a.second, b.second);
}

inline int vertex_count_of(const Graph& g) { return g.vertex_count(); }
inline int vertex_count_of(const GraphPair& p) { return p.first.vertex_count(); }

inline std::string to_string(const GraphPair& p) {
  return "(" + to_string(p.first) + "," + to_string(p.second) + ")";
}

}  // namespace gconf

template <>
struct std::hash<gconf::Graph> {
  std::size_t operator()(const gconf::Graph& g) const noexcept {
    return (static_cast<std::size_t>(g.vertex_count()) << 32) ^ g.mask();
  }
};
