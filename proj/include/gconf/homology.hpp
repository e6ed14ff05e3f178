#pragma once

#include <gconf/integer_matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace gconf {

struct SmithResult {
  std::vector<Integer> invariant_factors;  // d1 | d2 | ... | dr, all positive
  std::size_t rank = 0;
};

struct HomologySummary {
  std::size_t degree = 0;
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, in divisibility order
  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

namespace detail {

/// Rewrites a list of positive diagonal entries into divisibility order
/// using gcd/lcm exchanges (which preserve the diagonal's Smith form).
inline std::vector<Integer> normalize_diagonal(std::vector<Integer> diag) {
  std::vector<Integer> ones, rest;
  for (auto& v : diag) (v == 1 ? ones : rest).push_back(abs_value(v));
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      if (rest[j] % rest[i] == 0) continue;
      Integer g = gcd(rest[i], rest[j]);
      Integer l = lcm(rest[i], rest[j]);
      rest[i] = g;
      rest[j] = l;
    }
  std::vector<Integer> out;
  out.reserve(diag.size());
  for (auto& v : rest)
    if (v == 1) ones.push_back(1);
  out.insert(out.end(), ones.begin(), ones.end());
  for (auto& v : rest)
    if (v != 1) out.push_back(v);
  return out;
}

inline void dense_smith(std::vector<std::vector<Integer>> a, std::vector<Integer>& diag) {
  std::size_t m = a.size();
  std::size_t n = m ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pr == m || abs_value(a[i][j]) < abs_value(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == m) return;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      const Integer p = a[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = nearest_quotient(a[i][t], p);
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = nearest_quotient(a[t][j], p);
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) {
        diag.push_back(abs_value(p));
        break;
      }
    }
  }
}

/// Row-major sparse working copy with column occupancy lists.
class SparseWork {
 public:
  using Row = std::vector<std::pair<std::size_t, Integer>>;

  explicit SparseWork(const IntegerMatrix& m) : rows_(m.rows()), col_rows_(m.cols()) {
    for (const auto& t : m.entries()) {
      rows_[t.row].emplace_back(t.col, t.value);
      col_rows_[t.col].push_back(t.row);
    }
  }

  std::size_t row_count() const { return rows_.size(); }
  const Row& row(std::size_t r) const { return rows_[r]; }
  const std::vector<std::size_t>& col(std::size_t c) const { return col_rows_[c]; }

  Integer get(std::size_t r, std::size_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it->second : Integer(0);
  }

  /// row_k -= q * row_i
  void row_axpy(std::size_t k, const Integer& q, std::size_t i) {
    Row merged;
    const Row& a = rows_[k];
    const Row& b = rows_[i];
    merged.reserve(a.size() + b.size());
    std::size_t x = 0, y = 0;
    while (x < a.size() || y < b.size()) {
      if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
        merged.push_back(a[x++]);
      } else if (x == a.size() || b[y].first < a[x].first) {
        merged.emplace_back(b[y].first, -q * b[y].second);
        col_rows_[b[y].first].push_back(k);
        ++y;
      } else {
        Integer v = a[x].second - q * b[y].second;
        if (v != 0)
          merged.emplace_back(a[x].first, std::move(v));
        else
          erase_from(col_rows_[a[x].first], k);
        ++x;
        ++y;
      }
    }
    rows_[k] = std::move(merged);
  }

  /// col_l -= q * col_j
  void col_axpy(std::size_t l, const Integer& q, std::size_t j) {
    std::vector<std::size_t> touched = col_rows_[j];
    for (std::size_t r : touched) set(r, l, get(r, l) - q * get(r, j));
  }

  void clear_row(std::size_t r) {
    for (const auto& [c, v] : rows_[r]) erase_from(col_rows_[c], r);
    rows_[r].clear();
  }

  void set(std::size_t r, std::size_t c, Integer v) {
    auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    bool present = it != row.end() && it->first == c;
    if (v == 0) {
      if (present) {
        row.erase(it);
        erase_from(col_rows_[c], r);
      }
    } else if (present) {
      it->second = std::move(v);
    } else {
      row.insert(it, {c, std::move(v)});
      col_rows_[c].push_back(r);
    }
  }

 private:
  static void erase_from(std::vector<std::size_t>& v, std::size_t x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it != v.end()) {
      *it = v.back();
      v.pop_back();
    }
  }

  std::vector<Row> rows_;
  std::vector<std::vector<std::size_t>> col_rows_;
};

inline constexpr std::size_t kDenseSmithLimit = 200;

}  // namespace detail

/**
 * Smith normal form invariants of an integer matrix.
 *
 * Unit pivots are eliminated first (cheapest column first); what remains is
 * reduced by minimal-absolute-value pivoting, densely once it fits in a
 * 200 x 200 block.
 */
inline SmithResult smith(const IntegerMatrix& m) {
  detail::SparseWork w(m);
  std::vector<Integer> diag;

  std::deque<std::size_t> queue;
  std::vector<char> queued(m.rows(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r) queue.push_back(r);
  while (!queue.empty()) {
    std::size_t r = queue.front();
    queue.pop_front();
    queued[r] = 0;
    std::size_t best = m.cols();
    for (const auto& [c, v] : w.row(r))
      if (is_unit(v) && (best == m.cols() || w.col(c).size() < w.col(best).size())) best = c;
    if (best == m.cols()) continue;
    const Integer u = w.get(r, best);
    std::vector<std::size_t> others = w.col(best);
    for (std::size_t k : others) {
      if (k == r) continue;
      w.row_axpy(k, w.get(k, best) * u, r);
      if (!queued[k]) {
        queued[k] = 1;
        queue.push_back(k);
      }
    }
    w.clear_row(r);
    diag.push_back(1);
  }

  std::vector<std::size_t> live_rows;
  std::vector<char> live_col(m.cols(), 0);
  std::size_t live_cols = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!w.row(r).empty()) {
      live_rows.push_back(r);
      for (const auto& e : w.row(r))
        if (!live_col[e.first]) {
          live_col[e.first] = 1;
          ++live_cols;
        }
    }

  if (live_rows.size() <= detail::kDenseSmithLimit && live_cols <= detail::kDenseSmithLimit) {
    std::vector<std::size_t> col_pos(m.cols(), 0);
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (live_col[c]) col_pos[c] = next++;
    std::vector<std::vector<Integer>> dense(live_rows.size(), std::vector<Integer>(live_cols));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : w.row(live_rows[i])) dense[i][col_pos[c]] = v;
    detail::dense_smith(std::move(dense), diag);
  } else {
    while (true) {
      std::size_t pr = m.rows(), pc = 0;
      Integer best;
      for (std::size_t r : live_rows)
        for (const auto& [c, v] : w.row(r))
          if (pr == m.rows() || abs_value(v) < best) {
            pr = r;
            pc = c;
            best = abs_value(v);
          }
      if (pr == m.rows()) break;
      while (true) {
        const Integer p = w.get(pr, pc);
        std::vector<std::size_t> col_rows = w.col(pc);
        for (std::size_t k : col_rows)
          if (k != pr) w.row_axpy(k, nearest_quotient(w.get(k, pc), p), pr);
        auto row = w.row(pr);
        for (const auto& [c, v] : row)
          if (c != pc) w.col_axpy(c, nearest_quotient(v, p), pc);
        if (w.col(pc).size() == 1 && w.row(pr).size() == 1) {
          diag.push_back(abs_value(p));
          w.clear_row(pr);
          break;
        }
        // a smaller remainder appeared in the pivot row or column
        std::size_t nr = pr, nc = pc;
        Integer small = abs_value(p);
        for (std::size_t k : w.col(pc))
          if (abs_value(w.get(k, pc)) < small) {
            small = abs_value(w.get(k, pc));
            nr = k;
            nc = pc;
          }
        for (const auto& [c, v] : w.row(pr))
          if (abs_value(v) < small) {
            small = abs_value(v);
            nr = pr;
            nc = c;
          }
        pr = nr;
        pc = nc;
      }
      std::erase_if(live_rows, [&](std::size_t r) { return w.row(r).empty(); });
    }
  }

  SmithResult out;
  out.rank = diag.size();
  out.invariant_factors = detail::normalize_diagonal(std::move(diag));
  return out;
}

/// Integral homology in every degree 0..top of a chain complex.
inline std::vector<HomologySummary> chain_homology(const EvaluatedComplex& c) {
  check_chain_complex(c);
  std::vector<SmithResult> snf;
  snf.reserve(c.differentials.size());
  for (const auto& d : c.differentials) snf.push_back(smith(d));
  std::vector<HomologySummary> out;
  for (std::size_t d = 0; d < c.ranks.size(); ++d) {
    std::size_t incoming = d < snf.size() ? snf[d].rank : 0;           // C_{d+1} -> C_d
    std::size_t outgoing = (d >= 1 && d - 1 < snf.size()) ? snf[d - 1].rank : 0;  // C_d -> C_{d-1}
    HomologySummary h;
    h.degree = d;
    h.betti = c.ranks[d] - incoming - outgoing;
    if (d < snf.size())
      for (const auto& f : snf[d].invariant_factors)
        if (f > 1) h.torsion.push_back(f);
    out.push_back(std::move(h));
  }
  return out;
}

inline bool is_zero(const HomologySummary& h) { return h.betti == 0 && h.torsion.empty(); }

/// "Z^3 + Z/2", "Z", or "0".
inline std::string format_group(const HomologySummary& h) {
  std::string s;
  if (h.betti == 1)
    s = "Z";
  else if (h.betti > 1)
    s = "Z^" + std::to_string(h.betti);
  for (const auto& t : h.torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t.str();
  return s.empty() ? "0" : s;
}

/// Betti numbers indexed by degree, trailing zero groups trimmed.
inline std::vector<std::size_t> betti_numbers(const std::vector<HomologySummary>& hs) {
  std::vector<std::size_t> out;
  for (const auto& h : hs) out.push_back(h.betti);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline bool torsion_free(const std::vector<HomologySummary>& hs) {
  return std::all_of(hs.begin(), hs.end(), [](const auto& h) { return h.torsion.empty(); });
}

}  // namespace gconf
