#pragma once

#include <gconf/homology.hpp>
#include <gconf/presheaf_complex.hpp>

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <vector>

namespace gconf {

struct PruneOptions {
  /// Validate the whole complex after every elimination (slow; for tests).
  bool paranoid = false;
};

namespace detail {

/**
 * Mutable copy of a presheaf complex used by the reductions.  Generators
 * are never renumbered while working; removed ones are flagged dead and
 * dropped by `freeze`.
 */
class WorkingComplex {
 public:
  explicit WorkingComplex(const PresheafComplex& c) : n_(c.vertex_count()) {
    for (std::size_t d = 0; d < c.degree_count(); ++d) {
      labels_.push_back(c.labels(d));
      alive_.emplace_back(c.rank(d), 1);
    }
    for (std::size_t d = 0; d + 1 < c.degree_count(); ++d)
      work_.emplace_back(c.differential(d).matrix());
    for (std::size_t d = 0; d < work_.size(); ++d) col_count_.push_back(c.rank(d));
  }

  std::size_t differential_count() const { return work_.size(); }
  const Graph& label(std::size_t degree, std::size_t i) const { return labels_[degree][i]; }
  bool alive(std::size_t degree, std::size_t i) const { return alive_[degree][i] != 0; }
  SparseWork& diff(std::size_t d) { return work_[d]; }
  std::size_t cols(std::size_t d) const { return col_count_[d]; }

  /// In differential d: row_k -= q * row_i, mirrored as col_i += q * col_k on d+1.
  void row_op(std::size_t d, std::size_t k, const Integer& q, std::size_t i) {
    work_[d].row_axpy(k, q, i);
    if (d + 1 < work_.size()) work_[d + 1].col_axpy(i, -q, k);
  }

  /// In differential d: col_l -= q * col_j, mirrored as row_j += q * row_l on d-1.
  void col_op(std::size_t d, std::size_t l, const Integer& q, std::size_t j) {
    work_[d].col_axpy(l, q, j);
    if (d >= 1) work_[d - 1].row_axpy(j, -q, l);
  }

  /// Cancels generator r (degree d+1) against c (degree d) through the unit
  /// entry at (r, c), replacing the remaining block by its Schur complement.
  /// Returns the rows of differential d whose entries changed.
  std::vector<std::size_t> eliminate(std::size_t d, std::size_t r, std::size_t c) {
    SparseWork& w = work_[d];
    const Integer u = w.get(r, c);  // u = u^{-1}
    std::vector<std::size_t> touched = w.col(c);
    std::erase(touched, r);
    for (std::size_t k : touched) w.row_axpy(k, w.get(k, c) * u, r);
    w.clear_row(r);
    if (d + 1 < work_.size()) {
      SparseWork& up = work_[d + 1];
      std::vector<std::size_t> rows = up.col(r);
      for (std::size_t k : rows) up.set(k, r, 0);
    }
    if (d >= 1) work_[d - 1].clear_row(c);
    alive_[d + 1][r] = 0;
    alive_[d][c] = 0;
    return touched;
  }

  PresheafComplex freeze() const {
    std::vector<std::vector<Graph>> degrees(labels_.size());
    std::vector<std::vector<std::size_t>> position(labels_.size());
    for (std::size_t d = 0; d < labels_.size(); ++d) {
      position[d].assign(labels_[d].size(), 0);
      for (std::size_t i = 0; i < labels_[d].size(); ++i)
        if (alive_[d][i]) {
          position[d][i] = degrees[d].size();
          degrees[d].push_back(labels_[d][i]);
        }
    }
    std::vector<LabeledMatrix> diffs;
    for (std::size_t d = 0; d < work_.size(); ++d) {
      std::vector<Triplet> e;
      for (std::size_t r = 0; r < work_[d].row_count(); ++r) {
        if (!alive_[d + 1][r]) continue;
        for (const auto& [c, v] : work_[d].row(r))
          if (alive_[d][c]) e.push_back({position[d + 1][r], position[d][c], v});
      }
      diffs.emplace_back(degrees[d + 1], degrees[d], std::move(e));
    }
    return PresheafComplex(n_, std::move(degrees), std::move(diffs));
  }

 private:
  int n_;
  std::vector<std::vector<Graph>> labels_;
  std::vector<std::vector<char>> alive_;
  std::vector<SparseWork> work_;
  std::vector<std::size_t> col_count_;
};

/// Unit pruning of one differential until no equal-label unit entry is left.
/// Rows are visited in basis order (revisited when they change); within a
/// row the pivot column with the fewest entries wins, lowest index on ties.
inline void unit_prune_differential(WorkingComplex& w, std::size_t d, const PruneOptions& opts) {
  SparseWork& m = w.diff(d);
  std::deque<std::size_t> queue;
  std::vector<char> queued(m.row_count(), 0);
  for (std::size_t r = 0; r < m.row_count(); ++r)
    if (w.alive(d + 1, r)) {
      queue.push_back(r);
      queued[r] = 1;
    }
  while (!queue.empty()) {
    std::size_t r = queue.front();
    queue.pop_front();
    queued[r] = 0;
    if (!w.alive(d + 1, r)) continue;
    std::size_t best = w.cols(d);
    for (const auto& [c, v] : m.row(r)) {
      if (!is_unit(v) || w.label(d + 1, r) != w.label(d, c)) continue;
      if (best == w.cols(d) || m.col(c).size() < m.col(best).size()) best = c;
    }
    if (best == w.cols(d)) continue;
    for (std::size_t k : w.eliminate(d, r, best))
      if (!queued[k]) {
        queued[k] = 1;
        queue.push_back(k);
      }
    if (opts.paranoid) require_valid(w.freeze(), "prune");
  }
}

inline void unit_prune(WorkingComplex& w, const PruneOptions& opts) {
  for (std::size_t d = 0; d < w.differential_count(); ++d) unit_prune_differential(w, d, opts);
}

struct BlockEntry {
  std::size_t row;
  std::size_t col;
  Integer value;
};

/// Entries of differential d whose row and column both carry `label`.
inline std::vector<BlockEntry> block_entries(WorkingComplex& w, std::size_t d,
                                             const Graph& label) {
  std::vector<BlockEntry> out;
  SparseWork& m = w.diff(d);
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    if (!w.alive(d + 1, r) || w.label(d + 1, r) != label) continue;
    for (const auto& [c, v] : m.row(r))
      if (w.label(d, c) == label) out.push_back({r, c, v});
  }
  return out;
}

/// Uses row and column operations inside a label-homogeneous block whose
/// entries have gcd 1 until some entry becomes a unit; returns its position.
inline std::pair<std::size_t, std::size_t> expose_unit(WorkingComplex& w, std::size_t d,
                                                       const Graph& label) {
  SparseWork& m = w.diff(d);
  while (true) {
    auto block = block_entries(w, d, label);
    auto pivot = std::min_element(block.begin(), block.end(), [](const auto& a, const auto& b) {
      return abs_value(a.value) < abs_value(b.value);
    });
    const std::size_t i = pivot->row, j = pivot->col;
    const Integer p = pivot->value;
    if (is_unit(p)) return {i, j};

    bool progressed = false;
    std::vector<std::size_t> col_rows = m.col(j);
    for (std::size_t k : col_rows) {
      if (k == i || w.label(d + 1, k) != label) continue;
      Integer q = nearest_quotient(m.get(k, j), p);
      if (q != 0) {
        w.row_op(d, k, q, i);
        progressed = true;
      }
    }
    auto row = m.row(i);
    for (const auto& [l, v] : row) {
      if (l == j || w.label(d, l) != label) continue;
      Integer q = nearest_quotient(v, p);
      if (q != 0) {
        w.col_op(d, l, q, j);
        progressed = true;
      }
    }
    if (progressed) continue;
    // p divides its row and column inside the block; pull in an entry it does not divide
    for (const auto& e : block_entries(w, d, label))
      if (e.value % p != 0) {
        w.row_op(d, i, Integer(-1), e.row);
        w.col_op(d, e.col, nearest_quotient(m.get(i, e.col), p), j);
        break;
      }
  }
}

}  // namespace detail

/// Removes acyclic pairs exposed by unit entries between equally labeled
/// generators, to a fixpoint.  Pointwise homology is unchanged.
inline PresheafComplex prune(const PresheafComplex& c, const PruneOptions& opts = {}) {
  require_valid(c, "prune");
  detail::WorkingComplex w(c);
  detail::unit_prune(w, opts);
  return w.freeze();
}

/// Unit pruning followed by elimination of every label-homogeneous block
/// that has 1 as a Smith invariant factor.
inline PresheafComplex prune_smith(const PresheafComplex& c, const PruneOptions& opts = {}) {
  require_valid(c, "prune_smith");
  detail::WorkingComplex w(c);
  detail::unit_prune(w, opts);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t d = 0; d < w.differential_count() && !changed; ++d) {
      std::map<Graph, Integer> block_gcd;
      detail::SparseWork& m = w.diff(d);
      for (std::size_t r = 0; r < m.row_count(); ++r) {
        if (!w.alive(d + 1, r)) continue;
        for (const auto& [col, v] : m.row(r))
          if (w.label(d + 1, r) == w.label(d, col)) {
            auto& g = block_gcd[w.label(d, col)];
            g = gcd(g, v);
          }
      }
      for (const auto& [label, g] : block_gcd) {
        if (g != 1) continue;
        auto [r, col] = detail::expose_unit(w, d, label);
        w.eliminate(d, r, col);
        if (opts.paranoid) require_valid(w.freeze(), "prune_smith");
        detail::unit_prune(w, opts);
        changed = true;
        break;
      }
    }
  }
  return w.freeze();
}

/// Connected components of the graph on generators joined by nonzero
/// differential entries, each returned as a complex in the original order.
inline std::vector<PresheafComplex> split_summands(const PresheafComplex& c) {
  std::vector<std::size_t> base(c.degree_count() + 1, 0);
  for (std::size_t d = 0; d < c.degree_count(); ++d) base[d + 1] = base[d] + c.rank(d);
  std::vector<std::size_t> parent(base.back());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t d = 0; d + 1 < c.degree_count(); ++d)
    for (const auto& t : c.differential(d).entries()) {
      std::size_t a = find(base[d + 1] + t.row), b = find(base[d] + t.col);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  std::map<std::size_t, std::size_t> component_of_root;  // ordered by first generator
  for (std::size_t g = 0; g < parent.size(); ++g) component_of_root.emplace(find(g), 0);
  std::size_t next = 0;
  for (auto& [root, idx] : component_of_root) idx = next++;

  std::vector<std::vector<std::vector<Graph>>> degrees(next,
                                                       std::vector<std::vector<Graph>>(c.degree_count()));
  std::vector<std::vector<std::size_t>> position(c.degree_count());
  std::vector<std::vector<std::size_t>> owner(c.degree_count());
  for (std::size_t d = 0; d < c.degree_count(); ++d)
    for (std::size_t i = 0; i < c.rank(d); ++i) {
      std::size_t comp = component_of_root[find(base[d] + i)];
      owner[d].push_back(comp);
      position[d].push_back(degrees[comp][d].size());
      degrees[comp][d].push_back(c.labels(d)[i]);
    }
  std::vector<std::vector<std::vector<Triplet>>> entries(
      next, std::vector<std::vector<Triplet>>(c.degree_count() ? c.degree_count() - 1 : 0));
  for (std::size_t d = 0; d + 1 < c.degree_count(); ++d)
    for (const auto& t : c.differential(d).entries())
      entries[owner[d + 1][t.row]][d].push_back(
          {position[d + 1][t.row], position[d][t.col], t.value});

  std::vector<PresheafComplex> out;
  for (std::size_t k = 0; k < next; ++k) {
    std::vector<LabeledMatrix> diffs;
    for (std::size_t d = 0; d + 1 < c.degree_count(); ++d)
      diffs.emplace_back(degrees[k][d + 1], degrees[k][d], std::move(entries[k][d]));
    out.emplace_back(c.vertex_count(), std::move(degrees[k]), std::move(diffs));
  }
  return out;
}

}  // namespace gconf
