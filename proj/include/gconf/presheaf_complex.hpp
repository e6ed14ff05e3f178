#pragma once

#include <gconf/graph.hpp>
#include <gconf/integer_matrix.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gconf {

/**
 * A map between finite sums of representable presheaves: an integer matrix
 * whose rows (domain generators) and columns (codomain generators) carry
 * labels.  A nonzero entry is meaningful only when the row label is
 * contained in the column label; `forced_zero_violations` lists the others.
 */
template <typename Label>
class BasicLabeledMatrix {
 public:
  BasicLabeledMatrix() = default;

  BasicLabeledMatrix(std::vector<Label> row_labels, std::vector<Label> col_labels,
                     std::vector<Triplet> entries = {})
      : row_labels_(std::move(row_labels)),
        col_labels_(std::move(col_labels)),
        matrix_(row_labels_.size(), col_labels_.size(), std::move(entries)) {}

  BasicLabeledMatrix(std::vector<Label> row_labels, std::vector<Label> col_labels,
                     IntegerMatrix matrix)
      : row_labels_(std::move(row_labels)),
        col_labels_(std::move(col_labels)),
        matrix_(std::move(matrix)) {
    if (matrix_.rows() != row_labels_.size() || matrix_.cols() != col_labels_.size())
      throw InputError("labeled matrix shape does not match its labels");
  }

  const std::vector<Label>& row_labels() const { return row_labels_; }
  const std::vector<Label>& col_labels() const { return col_labels_; }
  const IntegerMatrix& matrix() const { return matrix_; }
  std::size_t rows() const { return matrix_.rows(); }
  std::size_t cols() const { return matrix_.cols(); }
  const std::vector<Triplet>& entries() const { return matrix_.entries(); }
  Integer at(std::size_t r, std::size_t c) const { return matrix_.at(r, c); }

  std::vector<std::pair<std::size_t, std::size_t>> forced_zero_violations() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& t : matrix_.entries())
      if (!is_subgraph(row_labels_[t.row], col_labels_[t.col])) out.emplace_back(t.row, t.col);
    return out;
  }

  friend bool operator==(const BasicLabeledMatrix&, const BasicLabeledMatrix&) = default;

 private:
  std::vector<Label> row_labels_;
  std::vector<Label> col_labels_;
  IntegerMatrix matrix_;
};

/**
 * Bounded chain complex of free presheaves on the graph poset.
 *
 * `labels(d)` is the basis of degree d; `differential(d)` maps degree d+1
 * to degree d, so its rows are labels(d+1) and its columns labels(d).
 * Trailing empty degrees are trimmed, so two complexes with the same
 * generators and matrices compare equal.
 */
template <typename Label>
class BasicComplex {
 public:
  using Matrix = BasicLabeledMatrix<Label>;

  BasicComplex() = default;
  explicit BasicComplex(int n) : n_(n) {}

  /// Differentials missing from `differentials` are taken to be zero.
  BasicComplex(int n, std::vector<std::vector<Label>> degrees, std::vector<Matrix> differentials)
      : n_(n), degrees_(std::move(degrees)) {
    for (const auto& basis : degrees_)
      for (const auto& label : basis)
        if (vertex_count_of(label) != n_)
          throw InputError("generator label " + to_string(label) + " is not on " +
                           std::to_string(n_) + " vertices");
    if (differentials.size() > (degrees_.empty() ? 0 : degrees_.size() - 1))
      throw InputError("more differentials than consecutive degree pairs");
    for (std::size_t d = 0; d < differentials.size(); ++d) {
      const auto& m = differentials[d];
      if (m.row_labels() != degrees_[d + 1] || m.col_labels() != degrees_[d])
        throw InputError("differential " + std::to_string(d) +
                         " labels do not match the bases of degrees " + std::to_string(d + 1) +
                         " and " + std::to_string(d));
    }
    differentials_ = std::move(differentials);
    normalize();
  }

  int vertex_count() const { return n_; }

  /// Number of stored degrees (top degree + 1), 0 for the zero complex.
  std::size_t degree_count() const { return degrees_.size(); }

  const std::vector<Label>& labels(std::size_t d) const {
    static const std::vector<Label> kEmpty;
    return d < degrees_.size() ? degrees_[d] : kEmpty;
  }

  std::size_t rank(std::size_t d) const { return labels(d).size(); }

  std::size_t total_rank() const {
    std::size_t t = 0;
    for (const auto& b : degrees_) t += b.size();
    return t;
  }

  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> out;
    for (const auto& b : degrees_) out.push_back(b.size());
    return out;
  }

  /// The map from degree d+1 to degree d.
  const Matrix& differential(std::size_t d) const {
    if (d < differentials_.size()) return differentials_[d];
    static thread_local Matrix zero;
    zero = Matrix(labels(d + 1), labels(d));
    return zero;
  }

  const std::vector<std::vector<Label>>& degrees() const { return degrees_; }
  const std::vector<Matrix>& differentials() const { return differentials_; }

  friend bool operator==(const BasicComplex&, const BasicComplex&) = default;

 private:
  void normalize() {
    while (!degrees_.empty() && degrees_.back().empty()) degrees_.pop_back();
    std::size_t want = degrees_.empty() ? 0 : degrees_.size() - 1;
    differentials_.resize(std::min(differentials_.size(), want));
    while (differentials_.size() < want) {
      std::size_t d = differentials_.size();
      differentials_.emplace_back(degrees_[d + 1], degrees_[d]);
    }
  }

  int n_ = 0;
  std::vector<std::vector<Label>> degrees_;
  std::vector<Matrix> differentials_;
};

using LabeledMatrix = BasicLabeledMatrix<Graph>;
using PresheafComplex = BasicComplex<Graph>;
using PairComplex = BasicComplex<GraphPair>;

struct Violation {
  enum class Kind { forced_zero, nonzero_square };
  Kind kind;
  std::size_t differential;  // index d of the offending map C_{d+1} -> C_d
  std::size_t row;
  std::size_t col;
  std::string message;
};

struct Diagnostics {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

template <typename Label>
Diagnostics validate(const BasicComplex<Label>& c) {
  Diagnostics out;
  for (std::size_t d = 0; d < c.differentials().size(); ++d) {
    const auto& m = c.differential(d);
    for (auto [r, col] : m.forced_zero_violations())
      out.violations.push_back(
          {Violation::Kind::forced_zero, d, r, col,
           "entry (" + std::to_string(r) + "," + std::to_string(col) + ") of differential " +
               std::to_string(d) + " maps " + to_string(m.row_labels()[r]) + " to " +
               to_string(m.col_labels()[col]) + ", which is not a subgraph relation"});
  }
  for (std::size_t d = 0; d + 1 < c.differentials().size(); ++d) {
    IntegerMatrix sq = multiply(c.differential(d + 1).matrix(), c.differential(d).matrix());
    for (const auto& t : sq.entries())
      out.violations.push_back({Violation::Kind::nonzero_square, d, t.row, t.col,
                                "composite from degree " + std::to_string(d + 2) + " to " +
                                    std::to_string(d) + " has entry " + t.value.str() + " at (" +
                                    std::to_string(t.row) + "," + std::to_string(t.col) + ")"});
  }
  return out;
}

template <typename Label>
void require_valid(const BasicComplex<Label>& c, const char* op) {
  auto diag = validate(c);
  if (!diag.ok())
    throw InputError(std::string(op) + ": invalid complex: " + diag.violations.front().message +
                     (diag.violations.size() > 1
                          ? " (and " + std::to_string(diag.violations.size() - 1) + " more)"
                          : std::string()));
}

/// C[k]: generators of degree d move to degree d + k.
template <typename Label>
BasicComplex<Label> shift(const BasicComplex<Label>& c, std::size_t k) {
  if (c.degree_count() == 0) return c;
  std::vector<std::vector<Label>> degrees(k);
  degrees.insert(degrees.end(), c.degrees().begin(), c.degrees().end());
  std::vector<BasicLabeledMatrix<Label>> diffs;
  for (std::size_t d = 0; d < k; ++d) diffs.emplace_back(degrees[d + 1], degrees[d]);
  diffs.insert(diffs.end(), c.differentials().begin(), c.differentials().end());
  return BasicComplex<Label>(c.vertex_count(), std::move(degrees), std::move(diffs));
}

/// Inverse of shift; degrees below k must be empty.
template <typename Label>
BasicComplex<Label> unshift(const BasicComplex<Label>& c, std::size_t k) {
  for (std::size_t d = 0; d < k && d < c.degree_count(); ++d)
    if (c.rank(d) != 0)
      throw InputError("cannot shift down by " + std::to_string(k) + ": degree " +
                       std::to_string(d) + " is nonzero");
  if (c.degree_count() <= k) return BasicComplex<Label>(c.vertex_count());
  std::vector<std::vector<Label>> degrees(c.degrees().begin() + k, c.degrees().end());
  std::vector<BasicLabeledMatrix<Label>> diffs(c.differentials().begin() + k,
                                               c.differentials().end());
  return BasicComplex<Label>(c.vertex_count(), std::move(degrees), std::move(diffs));
}

template <typename Label>
BasicComplex<Label> direct_sum(const BasicComplex<Label>& a, const BasicComplex<Label>& b) {
  if (a.vertex_count() != b.vertex_count())
    throw InputError("direct_sum: complexes over graphs on " + std::to_string(a.vertex_count()) +
                     " and " + std::to_string(b.vertex_count()) + " vertices");
  std::size_t top = std::max(a.degree_count(), b.degree_count());
  std::vector<std::vector<Label>> degrees(top);
  for (std::size_t d = 0; d < top; ++d) {
    degrees[d] = a.labels(d);
    degrees[d].insert(degrees[d].end(), b.labels(d).begin(), b.labels(d).end());
  }
  std::vector<BasicLabeledMatrix<Label>> diffs;
  for (std::size_t d = 0; d + 1 < top; ++d) {
    std::vector<Triplet> e = a.differential(d).entries();
    for (const auto& t : b.differential(d).entries())
      e.push_back({t.row + a.rank(d + 1), t.col + a.rank(d), t.value});
    diffs.emplace_back(degrees[d + 1], degrees[d], std::move(e));
  }
  return BasicComplex<Label>(a.vertex_count(), std::move(degrees), std::move(diffs));
}

template <typename Label>
BasicComplex<Label> direct_sum(const std::vector<BasicComplex<Label>>& parts, int n) {
  BasicComplex<Label> out(n);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

/// k-fold direct sum of c with itself.
template <typename Label>
BasicComplex<Label> power(const BasicComplex<Label>& c, std::size_t k) {
  return direct_sum(std::vector<BasicComplex<Label>>(k, c), c.vertex_count());
}

namespace detail {

/// Basis bookkeeping of a tensor product: position of x (x in C_i) and y
/// (y in D_j) inside degree i + j, listing pairs by i, then x, then y.
struct TensorLayout {
  std::vector<std::vector<std::size_t>> offset;  // offset[k][i] = first slot of block (i, k-i)

  TensorLayout(const std::vector<std::size_t>& cr, const std::vector<std::size_t>& dr) {
    std::size_t top = cr.empty() || dr.empty() ? 0 : cr.size() + dr.size() - 1;
    offset.assign(top, {});
    for (std::size_t k = 0; k < top; ++k) {
      std::size_t pos = 0;
      offset[k].assign(cr.size(), 0);
      for (std::size_t i = 0; i < cr.size() && i <= k; ++i) {
        offset[k][i] = pos;
        std::size_t j = k - i;
        if (j < dr.size()) pos += cr[i] * dr[j];
      }
    }
  }
};

template <typename Label, typename Combine>
auto tensor(const PresheafComplex& c, const PresheafComplex& d, Combine combine) {
  if (c.vertex_count() != d.vertex_count())
    throw InputError("tensor product of complexes over graphs on " +
                     std::to_string(c.vertex_count()) + " and " +
                     std::to_string(d.vertex_count()) + " vertices");
  const int n = c.vertex_count();
  auto cr = c.ranks();
  auto dr = d.ranks();
  TensorLayout layout(cr, dr);
  const std::size_t top = layout.offset.size();

  std::vector<std::vector<Label>> degrees(top);
  for (std::size_t k = 0; k < top; ++k)
    for (std::size_t i = 0; i < cr.size() && i <= k; ++i) {
      std::size_t j = k - i;
      if (j >= dr.size()) continue;
      for (const auto& x : c.labels(i))
        for (const auto& y : d.labels(j)) degrees[k].push_back(combine(x, y));
    }

  std::vector<BasicLabeledMatrix<Label>> diffs;
  for (std::size_t k = 0; k + 1 < top; ++k) {
    // d(x (x) y) = dx (x) y + (-1)^i x (x) dy, for x in degree i, from degree k+1 to k
    std::vector<Triplet> e;
    for (std::size_t i = 0; i < cr.size() && i <= k + 1; ++i) {
      std::size_t j = k + 1 - i;
      if (j >= dr.size()) continue;
      std::size_t src = layout.offset[k + 1][i];
      if (i >= 1 && cr[i] && dr[j]) {
        std::size_t dst = layout.offset[k][i - 1];
        for (const auto& t : c.differential(i - 1).entries())
          for (std::size_t y = 0; y < dr[j]; ++y)
            e.push_back({src + t.row * dr[j] + y, dst + t.col * dr[j] + y, t.value});
      }
      if (j >= 1 && cr[i] && dr[j]) {
        std::size_t dst = layout.offset[k][i];
        const bool odd = i % 2 == 1;
        for (std::size_t x = 0; x < cr[i]; ++x)
          for (const auto& t : d.differential(j - 1).entries())
            e.push_back({src + x * dr[j] + t.row, dst + x * dr[j - 1] + t.col,
                         odd ? Integer(-t.value) : t.value});
      }
    }
    diffs.emplace_back(degrees[k + 1], degrees[k], std::move(e));
  }
  return BasicComplex<Label>(n, std::move(degrees), std::move(diffs));
}

}  // namespace detail

/// Outer tensor product, labels are pairs (label in C, label in D).
inline PairComplex boxtimes(const PresheafComplex& c, const PresheafComplex& d) {
  return detail::tensor<GraphPair>(c, d, [](const Graph& x, const Graph& y) {
    return GraphPair{x, y};
  });
}

/// Union-tensor product: the outer tensor product relabeled by edge unions.
inline PresheafComplex odot(const PresheafComplex& c, const PresheafComplex& d) {
  return detail::tensor<Graph>(c, d, [](const Graph& x, const Graph& y) {
    return graph_union(x, y);
  });
}

/// Applies the union functor to a pair-labeled complex.
inline PresheafComplex union_labels(const PairComplex& c) {
  std::vector<std::vector<Graph>> degrees;
  for (const auto& basis : c.degrees()) {
    degrees.emplace_back();
    for (const auto& p : basis) degrees.back().push_back(graph_union(p.first, p.second));
  }
  std::vector<LabeledMatrix> diffs;
  for (std::size_t d = 0; d < c.differentials().size(); ++d)
    diffs.emplace_back(degrees[d + 1], degrees[d], c.differential(d).matrix());
  return PresheafComplex(c.vertex_count(), std::move(degrees), std::move(diffs));
}

/// Value of the complex at g: the generators whose label contains g.
inline EvaluatedComplex evaluate(const PresheafComplex& c, const Graph& g) {
  if (g.vertex_count() != c.vertex_count())
    throw InputError("evaluate: graph on " + std::to_string(g.vertex_count()) +
                     " vertices for a complex over graphs on " + std::to_string(c.vertex_count()));
  EvaluatedComplex out;
  std::vector<std::vector<std::size_t>> position(c.degree_count());
  constexpr std::size_t kDropped = static_cast<std::size_t>(-1);
  for (std::size_t d = 0; d < c.degree_count(); ++d) {
    std::size_t kept = 0;
    for (const auto& label : c.labels(d))
      position[d].push_back(is_subgraph(g, label) ? kept++ : kDropped);
    out.ranks.push_back(kept);
  }
  for (std::size_t d = 0; d + 1 < c.degree_count(); ++d) {
    std::vector<Triplet> e;
    for (const auto& t : c.differential(d).entries()) {
      std::size_t r = position[d + 1][t.row];
      std::size_t col = position[d][t.col];
      if (r != kDropped && col != kDropped) e.push_back({r, col, t.value});
    }
    out.differentials.emplace_back(out.ranks[d + 1], out.ranks[d], std::move(e));
  }
  while (!out.ranks.empty() && out.ranks.back() == 0) {
    out.ranks.pop_back();
    if (!out.differentials.empty()) out.differentials.pop_back();
  }
  return out;
}

/// Keeps degrees 0..top of an evaluated complex.
inline EvaluatedComplex truncate(const EvaluatedComplex& c, std::size_t top) {
  EvaluatedComplex out = c;
  if (out.ranks.size() > top + 1) out.ranks.resize(top + 1);
  if (out.differentials.size() > top) out.differentials.resize(top);
  return out;
}

}  // namespace gconf
