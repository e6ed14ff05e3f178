#pragma once

#include <gconf/presheaf_complex.hpp>
#include <gconf/prune.hpp>
#include <gconf/simplicial.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gconf {

/**
 * How generators of a configuration model are produced from the
 * triangulated power T = X^n.
 *
 *  - separated: T itself; a simplex is labeled by the graph of coordinate
 *    pairs that stay in disjoint closed vertex stars of X on every vertex of
 *    the simplex.  Needs X subdivided finely enough (two subdivisions for
 *    graphs like the letters).
 *  - barycentric: chains of simplices of T (the subdivision sd T); a chain
 *    is labeled by the coordinate pairs that differ somewhere on its
 *    smallest simplex.  Exact for every X, no subdivision needed.
 *  - dual_cell: interior simplices of T in complementary degree with the
 *    coboundary as differential.  Exact when T is an orientable
 *    triangulated manifold, possibly with boundary; much smaller than the
 *    barycentric model.
 *  - automatic: dual_cell when T passes the manifold checks, else barycentric.
 */
enum class CoverRule { separated, barycentric, dual_cell, automatic };

inline std::string to_string(CoverRule r) {
  switch (r) {
    case CoverRule::separated: return "separated";
    case CoverRule::barycentric: return "barycentric";
    case CoverRule::dual_cell: return "dual-cell";
    case CoverRule::automatic: return "automatic";
  }
  return "?";
}

inline CoverRule parse_cover_rule(const std::string& s) {
  if (s == "separated") return CoverRule::separated;
  if (s == "barycentric") return CoverRule::barycentric;
  if (s == "dual-cell" || s == "dual_cell") return CoverRule::dual_cell;
  if (s == "automatic" || s == "auto") return CoverRule::automatic;
  throw InputError("unknown cover rule '" + s + "'");
}

struct ModelOptions {
  CoverRule rule = CoverRule::separated;
  int subdivisions = 2;
  std::size_t simplex_guard = kDefaultSimplexGuard;
  bool prune = true;
};

namespace detail {

struct VectorHash {
  template <typename T>
  std::size_t operator()(const std::vector<T>& v) const noexcept {
    std::size_t h = v.size();
    for (const auto& x : v) h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::size_t>(x) + (h >> 29);
    return h;
  }
};

template <typename T>
using IndexMap = std::unordered_map<std::vector<T>, std::uint32_t, VectorHash>;

/// Coordinate pairs (i, j) on which the tuple w has distinct entries.
inline Graph difference_graph(const std::vector<int>& w) {
  Graph g(static_cast<int>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] != w[j]) g = g.with_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return g;
}

/// Pairs (i, j) that differ on at least one vertex of the simplex.
inline Graph difference_graph(const StaircaseProduct& t, const std::vector<std::uint64_t>& s,
                              int n) {
  std::uint32_t mask = 0;
  for (auto v : s) mask |= difference_graph(t.tuple(v)).mask();
  return Graph::from_mask(n, mask);
}

inline void check_model_size(std::size_t count, std::size_t guard, const char* what) {
  if (count > guard)
    throw ResourceError(std::string(what) + " has more than " + std::to_string(guard) +
                        " generators");
}

/// Builds degree lists and boundary matrices from cells indexed per degree,
/// given each cell's faces as (face index, sign).
struct CellComplexBuilder {
  int n;
  std::vector<std::vector<Graph>> degrees;
  std::vector<std::vector<Triplet>> entries;

  explicit CellComplexBuilder(int n_) : n(n_) {}

  std::size_t add(std::size_t degree, const Graph& label) {
    if (degrees.size() <= degree) degrees.resize(degree + 1);
    degrees[degree].push_back(label);
    return degrees[degree].size() - 1;
  }

  /// Entry of the map from degree+1 to degree.
  void entry(std::size_t degree, std::size_t row, std::size_t col, int value) {
    if (entries.size() <= degree) entries.resize(degree + 1);
    entries[degree].push_back({row, col, Integer(value)});
  }

  PresheafComplex build() {
    std::vector<LabeledMatrix> diffs;
    for (std::size_t d = 0; d + 1 < degrees.size(); ++d)
      diffs.emplace_back(degrees[d + 1], degrees[d],
                         d < entries.size() ? std::move(entries[d]) : std::vector<Triplet>{});
    return PresheafComplex(n, std::move(degrees), std::move(diffs));
  }
};

}  // namespace detail

/**
 * Labels of the separated cover: vertex tuple w gets the pairs (i, j) with
 * w_i, w_j not spanning a simplex of X; a simplex gets the intersection of
 * its vertex labels.
 */
struct CoverLabeling {
  StaircaseProduct product;
  std::vector<Graph> vertex_labels;   // by product vertex id
  std::vector<Graph> simplex_labels;  // parallel to product.simplices()
};

inline Graph separation_label(const SimplicialComplex& x, const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int a = std::min(w[i], w[j]), b = std::max(w[i], w[j]);
      if (a != b && !x.contains({a, b})) g = g.with_edge(i + 1, j + 1);
    }
  return g;
}

inline CoverLabeling cover_labeling(const SimplicialComplex& x, int n,
                                    std::size_t guard = kDefaultSimplexGuard) {
  if (n < 1) throw InputError("configuration models need n >= 1");
  if (n > Graph::kMaxVertices)
    throw InputError("at most " + std::to_string(Graph::kMaxVertices) + " points supported");
  CoverLabeling out{StaircaseProduct(std::vector<SimplicialComplex>(n, x), guard), {}, {}};
  out.vertex_labels.reserve(out.product.vertex_count());
  for (std::uint64_t v = 0; v < out.product.vertex_count(); ++v)
    out.vertex_labels.push_back(separation_label(x, out.product.tuple(v)));
  for (const auto& s : out.product.simplices()) {
    std::uint32_t mask = ~std::uint32_t{0};
    for (auto v : s) mask &= out.vertex_labels[v].mask();
    out.simplex_labels.push_back(Graph::from_mask(n, mask));
  }
  return out;
}

/// Labeled simplicial chain complex of the separated cover (unpruned).
inline PresheafComplex separated_chain_model(const CoverLabeling& lab, int n) {
  const auto& simplices = lab.product.simplices();
  detail::CellComplexBuilder b(n);
  std::vector<detail::IndexMap<std::uint64_t>> index;
  std::vector<std::uint32_t> local(simplices.size());
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    std::size_t d = simplices[s].size() - 1;
    if (index.size() <= d) index.resize(d + 1);
    local[s] = static_cast<std::uint32_t>(b.add(d, lab.simplex_labels[s]));
    index[d].emplace(simplices[s], local[s]);
  }
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    const auto& sim = simplices[s];
    if (sim.size() < 2) continue;
    std::size_t d = sim.size() - 1;
    for (std::size_t l = 0; l < sim.size(); ++l) {
      auto face = sim;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(l));
      b.entry(d - 1, local[s], index[d - 1].at(face), l % 2 ? -1 : 1);
    }
  }
  return b.build();
}

/// Chain complex of the face poset of T, graded by chain length (unpruned).
inline PresheafComplex barycentric_chain_model(const StaircaseProduct& t, int n,
                                               std::size_t guard = kDefaultSimplexGuard) {
  const auto& simplices = t.simplices();
  detail::IndexMap<std::uint64_t> simplex_index;
  for (std::size_t s = 0; s < simplices.size(); ++s)
    simplex_index.emplace(simplices[s], static_cast<std::uint32_t>(s));

  std::vector<std::vector<std::uint32_t>> supersets(simplices.size());
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    const auto& sim = simplices[s];
    const std::uint32_t full = (std::uint32_t{1} << sim.size()) - 1;
    for (std::uint32_t bits = 1; bits < full; ++bits) {
      std::vector<std::uint64_t> face;
      for (std::size_t k = 0; k < sim.size(); ++k)
        if (bits >> k & 1) face.push_back(sim[k]);
      supersets[simplex_index.at(face)].push_back(static_cast<std::uint32_t>(s));
    }
  }
  std::vector<Graph> label(simplices.size());
  for (std::size_t s = 0; s < simplices.size(); ++s)
    label[s] = detail::difference_graph(t, simplices[s], n);

  // chains in depth-first order from each starting simplex
  std::vector<std::vector<std::vector<std::uint32_t>>> chains;
  std::size_t total = 0;
  std::vector<std::uint32_t> chain;
  std::function<void(std::uint32_t)> grow = [&](std::uint32_t s) {
    chain.push_back(s);
    if (chains.size() < chain.size()) chains.resize(chain.size());
    chains[chain.size() - 1].push_back(chain);
    detail::check_model_size(++total, guard, "barycentric model");
    for (std::uint32_t up : supersets[s]) grow(up);
    chain.pop_back();
  };
  for (std::size_t s = 0; s < simplices.size(); ++s) grow(static_cast<std::uint32_t>(s));

  detail::CellComplexBuilder b(n);
  std::vector<detail::IndexMap<std::uint32_t>> index(chains.size());
  for (std::size_t d = 0; d < chains.size(); ++d)
    for (const auto& c : chains[d]) index[d].emplace(c, static_cast<std::uint32_t>(b.add(d, label[c.front()])));
  for (std::size_t d = 1; d < chains.size(); ++d)
    for (std::size_t r = 0; r < chains[d].size(); ++r) {
      const auto& c = chains[d][r];
      for (std::size_t l = 0; l < c.size(); ++l) {
        auto face = c;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(l));
        b.entry(d - 1, r, index[d - 1].at(face), l % 2 ? -1 : 1);
      }
    }
  return b.build();
}

namespace detail {

struct ManifoldCheck {
  bool ok = false;
  std::string reason;
  std::vector<char> boundary;  // per simplex of T: lies in the boundary
};

/// Pure, every codimension-one simplex in one or two top simplices, and
/// coherently orientable.  Links are not examined.
inline ManifoldCheck check_manifold(const StaircaseProduct& t) {
  ManifoldCheck out;
  const auto& simplices = t.simplices();
  const std::size_t top = static_cast<std::size_t>(t.dimension());
  IndexMap<std::uint64_t> index;
  for (std::size_t s = 0; s < simplices.size(); ++s)
    index.emplace(simplices[s], static_cast<std::uint32_t>(s));
  std::vector<std::vector<std::pair<std::uint32_t, int>>> cofacets(simplices.size());
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    const auto& sim = simplices[s];
    for (std::size_t l = 0; sim.size() > 1 && l < sim.size(); ++l) {
      auto face = sim;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(l));
      cofacets[index.at(face)].emplace_back(static_cast<std::uint32_t>(s), l % 2 ? -1 : 1);
    }
  }
  for (std::size_t s = 0; s < simplices.size(); ++s)
    if (simplices[s].size() <= top && cofacets[s].empty()) {
      out.reason = "not pure: a simplex of dimension " + std::to_string(simplices[s].size() - 1) +
                   " is maximal";
      return out;
    }
  out.boundary.assign(simplices.size(), 0);
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    if (simplices[s].size() != top) continue;
    if (cofacets[s].size() > 2) {
      out.reason = "a codimension-one simplex lies in more than two top simplices";
      return out;
    }
    if (cofacets[s].size() == 1) {
      const auto& sim = simplices[s];
      for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << sim.size()); ++bits) {
        std::vector<std::uint64_t> face;
        for (std::size_t k = 0; k < sim.size(); ++k)
          if (bits >> k & 1) face.push_back(sim[k]);
        out.boundary[index.at(face)] = 1;
      }
    }
  }
  // orientation: o(a) * sign_a + o(b) * sign_b = 0 across every interior codimension-one face
  std::vector<int> orient(simplices.size(), 0);
  std::vector<std::vector<std::pair<std::uint32_t, int>>> neighbours(simplices.size());
  for (std::size_t s = 0; s < simplices.size(); ++s)
    if (simplices[s].size() == top && cofacets[s].size() == 2) {
      auto [a, sa] = cofacets[s][0];
      auto [b, sb] = cofacets[s][1];
      neighbours[a].emplace_back(b, -sa * sb);
      neighbours[b].emplace_back(a, -sa * sb);
    }
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    if (simplices[s].size() != top + 1 || orient[s] != 0) continue;
    orient[s] = 1;
    std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(s)};
    while (!stack.empty()) {
      auto a = stack.back();
      stack.pop_back();
      for (auto [b, rel] : neighbours[a]) {
        int want = orient[a] * rel;
        if (orient[b] == 0) {
          orient[b] = want;
          stack.push_back(b);
        } else if (orient[b] != want) {
          out.reason = "not orientable";
          return out;
        }
      }
    }
  }
  out.ok = true;
  return out;
}

}  // namespace detail

/// Whether the dual-cell rule applies to the triangulated power.
inline bool dual_cell_applicable(const StaircaseProduct& t) {
  return detail::check_manifold(t).ok;
}

/// Interior simplices of T in degree dim T - dim s, with the coboundary
/// (unpruned).  Throws InputError when T fails the manifold checks.
inline PresheafComplex dual_cell_model(const StaircaseProduct& t, int n) {
  auto check = detail::check_manifold(t);
  if (!check.ok) throw InputError("dual-cell model needs an orientable manifold: " + check.reason);
  const auto& simplices = t.simplices();
  const std::size_t top = static_cast<std::size_t>(t.dimension());
  detail::CellComplexBuilder b(n);
  b.degrees.resize(top + 1);
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> local(simplices.size(), kNone);
  detail::IndexMap<std::uint64_t> index;
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    index.emplace(simplices[s], static_cast<std::uint32_t>(s));
    if (check.boundary[s]) continue;
    local[s] = static_cast<std::uint32_t>(
        b.add(top + 1 - simplices[s].size(), detail::difference_graph(t, simplices[s], n)));
  }
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    const auto& tau = simplices[s];
    if (local[s] == kNone || tau.size() < 2) continue;
    const std::size_t degree = top + 1 - tau.size();  // tau sits in degree `degree`
    for (std::size_t l = 0; l < tau.size(); ++l) {
      auto sigma = tau;
      sigma.erase(sigma.begin() + static_cast<std::ptrdiff_t>(l));
      std::uint32_t f = local[index.at(sigma)];
      if (f != kNone) b.entry(degree, f, local[s], l % 2 ? -1 : 1);
    }
  }
  return b.build();
}

/// Which rule `automatic` resolves to for this triangulated power.
inline CoverRule resolve_rule(CoverRule rule, const StaircaseProduct& t) {
  if (rule != CoverRule::automatic) return rule;
  return dual_cell_applicable(t) ? CoverRule::dual_cell : CoverRule::barycentric;
}

/// Presheaf model of Conf(-, X) over graphs on n vertices.
inline PresheafComplex star_model(const SimplicialComplex& x, int n, const ModelOptions& opts = {}) {
  if (n < 1) throw InputError("configuration models need n >= 1");
  if (n > Graph::kMaxVertices)
    throw InputError("at most " + std::to_string(Graph::kMaxVertices) + " points supported");
  if (opts.subdivisions < 0) throw InputError("subdivision count must be nonnegative");
  SimplicialComplex fine = subdivide(x, opts.subdivisions);
  PresheafComplex raw;
  if (opts.rule == CoverRule::separated) {
    raw = separated_chain_model(cover_labeling(fine, n, opts.simplex_guard), n);
  } else {
    StaircaseProduct t(std::vector<SimplicialComplex>(n, fine), opts.simplex_guard);
    raw = resolve_rule(opts.rule, t) == CoverRule::dual_cell
              ? dual_cell_model(t, n)
              : barycentric_chain_model(t, n, opts.simplex_guard);
  }
  return opts.prune ? prune(raw) : raw;
}

inline ModelOptions product_model_defaults() {
  ModelOptions o;
  o.rule = CoverRule::automatic;
  o.subdivisions = 0;
  return o;
}

/// Model of Conf(-, X x Y) built from the triangulated product directly,
/// without the union-tensor product.
inline PresheafComplex direct_product_model(const SimplicialComplex& x, const SimplicialComplex& y,
                                            int n, ModelOptions opts = product_model_defaults()) {
  SimplicialComplex w = staircase_product({subdivide(x, opts.subdivisions),
                                           subdivide(y, opts.subdivisions)},
                                          opts.simplex_guard);
  opts.subdivisions = 0;
  return star_model(w, n, opts);
}

}  // namespace gconf
