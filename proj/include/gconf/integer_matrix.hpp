#pragma once

#include <gconf/errors.hpp>
#include <gconf/integer.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gconf {

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  Integer value;
  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/**
 * Sparse integer matrix in sorted row-major triplet form.
 *
 * Rows index the domain basis and columns the codomain basis, so the
 * composite of f: A -> B followed by g: B -> C is the product f * g.
 * Duplicate coordinates are summed on construction and zeros dropped.
 */
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) { index(); }

  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    for (const auto& t : entries_)
      if (t.row >= rows_ || t.col >= cols_)
        throw InputError("matrix entry (" + std::to_string(t.row) + "," + std::to_string(t.col) +
                         ") outside a " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                         " matrix");
    std::sort(entries_.begin(), entries_.end(), [](const Triplet& a, const Triplet& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Triplet> merged;
    merged.reserve(entries_.size());
    for (auto& t : entries_) {
      if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col)
        merged.back().value += t.value;
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Triplet& t) { return t.value == 0; });
    entries_ = std::move(merged);
    index();
  }

  static IntegerMatrix from_dense(const std::vector<std::vector<Integer>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Triplet> entries;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw InputError("ragged dense matrix");
      for (std::size_t c = 0; c < cols; ++c)
        if (rows[r][c] != 0) entries.push_back({r, c, rows[r][c]});
    }
    return IntegerMatrix(rows.size(), cols, std::move(entries));
  }

  std::vector<std::vector<Integer>> to_dense() const {
    std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
    for (const auto& t : entries_) out[t.row][t.col] = t.value;
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Triplet>& entries() const { return entries_; }
  std::size_t nonzero_count() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  std::span<const Triplet> row(std::size_t r) const {
    return {entries_.data() + row_start_[r], entries_.data() + row_start_[r + 1]};
  }

  Integer at(std::size_t r, std::size_t c) const {
    auto span = row(r);
    auto it = std::lower_bound(span.begin(), span.end(), c,
                               [](const Triplet& t, std::size_t col) { return t.col < col; });
    return (it != span.end() && it->col == c) ? it->value : Integer(0);
  }

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void index() {
    row_start_.assign(rows_ + 1, 0);
    for (const auto& t : entries_) ++row_start_[t.row + 1];
    for (std::size_t r = 0; r < rows_; ++r) row_start_[r + 1] += row_start_[r];
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Triplet> entries_;
  std::vector<std::size_t> row_start_{0};
};

/// f * g with rows-as-domain: first f, then g.
inline IntegerMatrix multiply(const IntegerMatrix& f, const IntegerMatrix& g) {
  if (f.cols() != g.rows())
    throw InputError("cannot compose a " + std::to_string(f.rows()) + "x" +
                     std::to_string(f.cols()) + " matrix with a " + std::to_string(g.rows()) +
                     "x" + std::to_string(g.cols()) + " matrix");
  std::vector<Triplet> out;
  for (const auto& a : f.entries())
    for (const auto& b : g.row(a.col)) out.push_back({a.row, b.col, a.value * b.value});
  return IntegerMatrix(f.rows(), g.cols(), std::move(out));
}

/**
 * Ordinary chain complex of free abelian groups: ranks[d] = rank of C_d and
 * differentials[d] : C_{d+1} -> C_d (rows = degree d+1 basis).
 */
struct EvaluatedComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntegerMatrix> differentials;

  std::size_t rank(std::size_t d) const { return d < ranks.size() ? ranks[d] : 0; }
};

/// Throws InputError unless shapes line up and every composite vanishes.
inline void check_chain_complex(const EvaluatedComplex& c) {
  for (std::size_t d = 0; d < c.differentials.size(); ++d) {
    const auto& m = c.differentials[d];
    if (m.rows() != c.rank(d + 1) || m.cols() != c.rank(d))
      throw InputError("differential " + std::to_string(d) + " has shape " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                       ", expected " + std::to_string(c.rank(d + 1)) + "x" +
                       std::to_string(c.rank(d)));
  }
  for (std::size_t d = 0; d + 1 < c.differentials.size(); ++d)
    if (!multiply(c.differentials[d + 1], c.differentials[d]).is_zero())
      throw InputError("d*d != 0 between degrees " + std::to_string(d + 2) + " and " +
                       std::to_string(d));
}

}  // namespace gconf
