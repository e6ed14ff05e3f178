#pragma once

#include <gconf/errors.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace gconf {

using Simplex = std::vector<int>;  // sorted vertex ids

/**
 * Finite abstract simplicial complex on the ordered vertices 1..V, given by
 * its facets.  The facet list is normalized: vertices sorted within each
 * facet, non-maximal and repeated facets dropped, facets sorted.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  SimplicialComplex(int vertex_count, std::vector<Simplex> facets) : vertex_count_(vertex_count) {
    if (vertex_count < 1) throw InputError("simplicial complex needs at least one vertex");
    if (facets.empty()) throw InputError("simplicial complex needs at least one facet");
    for (auto& f : facets) {
      if (f.empty()) throw InputError("empty facet");
      std::sort(f.begin(), f.end());
      if (std::adjacent_find(f.begin(), f.end()) != f.end())
        throw InputError("facet with a repeated vertex");
      if (f.front() < 1 || f.back() > vertex_count)
        throw InputError("facet vertex outside 1.." + std::to_string(vertex_count));
      if (f.size() > 20) throw InputError("facet dimension too large");
      for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << f.size()); ++bits) {
        Simplex face;
        for (std::size_t k = 0; k < f.size(); ++k)
          if (bits >> k & 1) face.push_back(f[k]);
        simplices_.insert(std::move(face));
      }
    }
    std::set<Simplex> unique(facets.begin(), facets.end());
    for (const auto& f : unique) {
      bool maximal = std::none_of(unique.begin(), unique.end(), [&](const Simplex& g) {
        return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
      });
      if (maximal) facets_.push_back(f);
    }
  }

  int vertex_count() const { return vertex_count_; }
  const std::vector<Simplex>& facets() const { return facets_; }

  int dimension() const {
    std::size_t top = 0;
    for (const auto& f : facets_) top = std::max(top, f.size());
    return static_cast<int>(top) - 1;
  }

  bool contains(const Simplex& s) const { return simplices_.count(s) != 0; }

  /// All nonempty simplices, ordered by dimension and then lexicographically.
  std::vector<Simplex> simplices() const {
    std::vector<Simplex> out(simplices_.begin(), simplices_.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
    return out;
  }

  std::size_t simplex_count() const { return simplices_.size(); }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.facets_ == b.facets_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Simplex> facets_;
  std::set<Simplex> simplices_;
};

/// Barycentric subdivision.  Vertex k of the result is the k-th simplex of
/// X in (dimension, lex) order; facets are the maximal chains of faces.
inline SimplicialComplex subdivide(const SimplicialComplex& x) {
  auto faces = x.simplices();
  std::map<Simplex, int> id;
  for (std::size_t i = 0; i < faces.size(); ++i) id[faces[i]] = static_cast<int>(i) + 1;
  std::vector<Simplex> facets;
  for (const auto& f : x.facets()) {
    Simplex order = f;
    do {
      Simplex chain, prefix;
      for (int v : order) {
        prefix.push_back(v);
        Simplex sorted = prefix;
        std::sort(sorted.begin(), sorted.end());
        chain.push_back(id[sorted]);
      }
      facets.push_back(chain);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return SimplicialComplex(static_cast<int>(faces.size()), std::move(facets));
}

inline SimplicialComplex subdivide(const SimplicialComplex& x, int times) {
  if (times < 0) throw InputError("subdivision count must be nonnegative");
  SimplicialComplex out = x;
  for (int i = 0; i < times; ++i) out = subdivide(out);
  return out;
}

inline constexpr std::size_t kDefaultSimplexGuard = 3'000'000;

/**
 * Simplices of the staircase triangulation of a product.
 *
 * A product vertex is a tuple of factor vertices, numbered 0.. in
 * lexicographic order (first factor most significant).  A simplex is a
 * chain w0 < w1 < ... of tuples, componentwise weakly increasing, whose
 * i-th coordinates span a simplex of the i-th factor.
 */
class StaircaseProduct {
 public:
  explicit StaircaseProduct(std::vector<SimplicialComplex> factors,
                            std::size_t guard = kDefaultSimplexGuard)
      : factors_(std::move(factors)) {
    if (factors_.empty()) throw InputError("staircase product of an empty list");
    radix_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;)
      radix_[i - 1] = radix_[i] * static_cast<std::uint64_t>(factors_[i].vertex_count());
    vertex_total_ = radix_[0] * static_cast<std::uint64_t>(factors_[0].vertex_count());
    enumerate(guard);
  }

  const std::vector<SimplicialComplex>& factors() const { return factors_; }
  std::uint64_t vertex_count() const { return vertex_total_; }

  /// Factor vertices (1-based) of product vertex id (0-based).
  std::vector<int> tuple(std::uint64_t id) const {
    std::vector<int> w(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      w[i] = static_cast<int>(id / radix_[i]) + 1;
      id %= radix_[i];
    }
    return w;
  }

  std::uint64_t id(const std::vector<int>& w) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < w.size(); ++i) out += static_cast<std::uint64_t>(w[i] - 1) * radix_[i];
    return out;
  }

  /// All simplices as increasing lists of product vertex ids, ordered by
  /// dimension and then lexicographically.
  const std::vector<std::vector<std::uint64_t>>& simplices() const { return simplices_; }

  int dimension() const {
    return simplices_.empty() ? -1 : static_cast<int>(simplices_.back().size()) - 1;
  }

  /// The triangulated product as a simplicial complex on vertices 1..V.
  SimplicialComplex complex() const {
    std::set<std::vector<std::uint64_t>> faces;
    for (const auto& s : simplices_)
      for (std::size_t l = 0; s.size() > 1 && l < s.size(); ++l) {
        auto f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(l));
        faces.insert(std::move(f));
      }
    std::vector<Simplex> facets;
    for (const auto& s : simplices_) {
      if (!faces.count(s)) {
        Simplex f;
        for (auto v : s) f.push_back(static_cast<int>(v) + 1);
        facets.push_back(std::move(f));
      }
    }
    return SimplicialComplex(static_cast<int>(vertex_total_), std::move(facets));
  }

 private:
  void enumerate(std::size_t guard) {
    const std::size_t k = factors_.size();
    std::vector<std::vector<int>> used(k);  // vertices of each factor
    for (std::size_t i = 0; i < k; ++i) {
      for (int v = 1; v <= factors_[i].vertex_count(); ++v)
        if (factors_[i].contains({v})) used[i].push_back(v);
    }
    std::vector<std::vector<int>> current(k);  // coordinate simplices of the chain
    std::vector<int> last(k);
    std::vector<std::uint64_t> chain;

    std::function<void()> extend = [&]() {
      simplices_.push_back(chain);
      if (simplices_.size() > guard)
        throw ResourceError("staircase product exceeds the simplex guard of " +
                            std::to_string(guard) + " simplices");
      // candidate next values per coordinate: stay, or move to a larger vertex spanning a simplex
      std::vector<std::vector<int>> options(k);
      for (std::size_t i = 0; i < k; ++i) {
        options[i].push_back(last[i]);
        for (int v : used[i]) {
          if (v <= last[i]) continue;
          current[i].push_back(v);
          if (factors_[i].contains(current[i])) options[i].push_back(v);
          current[i].pop_back();
        }
      }
      std::vector<std::size_t> pick(k, 0);
      while (true) {
        std::size_t pos = k;
        while (pos > 0) {
          --pos;
          if (++pick[pos] < options[pos].size()) break;
          pick[pos] = 0;
          if (pos == 0) return;
        }
        std::vector<int> saved = last;
        std::vector<int> w(k);
        for (std::size_t i = 0; i < k; ++i) {
          w[i] = options[i][pick[i]];
          if (w[i] != last[i]) current[i].push_back(w[i]);
        }
        last = w;
        chain.push_back(id(w));
        extend();
        chain.pop_back();
        for (std::size_t i = 0; i < k; ++i)
          if (w[i] != saved[i]) current[i].pop_back();
        last = saved;
      }
    };

    std::vector<std::size_t> start(k, 0);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) {
        last[i] = used[i][start[i]];
        current[i] = {last[i]};
      }
      chain = {id(last)};
      extend();
      std::size_t pos = k;
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++start[pos] < used[pos].size()) {
          done = false;
          break;
        }
        start[pos] = 0;
      }
      if (done) break;
    }
    std::sort(simplices_.begin(), simplices_.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
  }

  std::vector<SimplicialComplex> factors_;
  std::vector<std::uint64_t> radix_;
  std::uint64_t vertex_total_ = 0;
  std::vector<std::vector<std::uint64_t>> simplices_;
};

inline SimplicialComplex staircase_product(const std::vector<SimplicialComplex>& xs,
                                           std::size_t guard = kDefaultSimplexGuard) {
  return StaircaseProduct(xs, guard).complex();
}

/// The n-simplex on vertices 1..n+1.
inline SimplicialComplex simplex(int n) {
  Simplex f;
  for (int v = 1; v <= n + 1; ++v) f.push_back(v);
  return SimplicialComplex(n + 1, {f});
}

inline SimplicialComplex interval() { return simplex(1); }

/// Boundary of an m-gon, m >= 3.
inline SimplicialComplex cycle(int m) {
  if (m < 3) throw InputError("a cycle needs at least 3 edges");
  std::vector<Simplex> facets;
  for (int v = 1; v <= m; ++v) facets.push_back({v, v % m + 1});
  return SimplicialComplex(m, std::move(facets));
}

/// Cone on k points: leaves 1..k joined to the apex k+1.
inline SimplicialComplex star(int k) {
  std::vector<Simplex> facets;
  for (int v = 1; v <= k; ++v) facets.push_back({v, k + 1});
  return SimplicialComplex(k + 1, std::move(facets));
}

/// The unit square [0,1]^2 as the staircase triangulation of two intervals.
inline SimplicialComplex filled_square() { return staircase_product({interval(), interval()}); }

inline std::map<std::string, SimplicialComplex> letters() {
  return {{"X", star(4)}, {"Y", star(3)}, {"Z", interval()}, {"O", cycle(3)}};
}

inline SimplicialComplex letter(const std::string& name) {
  auto all = letters();
  auto it = all.find(name);
  if (it == all.end()) throw InputError("unknown letter '" + name + "' (expected X, Y, Z or O)");
  return it->second;
}

}  // namespace gconf
