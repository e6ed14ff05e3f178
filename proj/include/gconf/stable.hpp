#pragma once

#include <gconf/cover_model.hpp>
#include <gconf/pointwise.hpp>
#include <gconf/prune.hpp>

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace gconf {

inline constexpr int kStableGuard = 3;

/**
 * Splitting of a model of Conf(-, C) into pieces P_0 .. P_{n-1}, where P_i
 * has pointwise homology only in degree i and models F_i[i].
 */
struct StablePresheafModel {
  int n = 0;
  std::vector<PresheafComplex> pieces;

  /// F_i itself, i.e. P_i moved down by i.
  PresheafComplex f(std::size_t i) const { return unshift(pieces.at(i), i); }
};

/// Pruned model of Conf(-, C) at n points, from the dual-cell model of the
/// filled square.
inline PresheafComplex plane_model(int n, int guard = kStableGuard) {
  if (n < 1) throw InputError("plane model needs n >= 1");
  if (n > guard)
    throw ResourceError("plane model limited to n <= " + std::to_string(guard));
  ModelOptions opts;
  opts.rule = CoverRule::dual_cell;
  opts.subdivisions = 0;
  return star_model(filled_square(), n, opts);
}

/// Degrees in which the pointwise homology of c is nonzero somewhere.
inline std::set<std::size_t> homology_support(const PresheafComplex& c) {
  std::set<std::size_t> out;
  for (const auto& [g, hs] : pointwise_homology(c))
    for (const auto& h : hs)
      if (!is_zero(h)) out.insert(h.degree);
  return out;
}

/// Splits a pruned plane model into summands and groups them by the single
/// degree carrying their homology.  Acyclic summands are dropped.
inline StablePresheafModel formality_split(const PresheafComplex& c) {
  StablePresheafModel out;
  out.n = c.vertex_count();
  out.pieces.assign(static_cast<std::size_t>(out.n), PresheafComplex(out.n));
  for (const auto& summand : split_summands(prune_smith(c))) {
    auto support = homology_support(summand);
    if (support.empty()) continue;
    if (support.size() > 1) {
      std::string degrees;
      for (auto d : support) degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
      throw SplittingError("summand with " + std::to_string(summand.total_rank()) +
                           " generators has homology in degrees " + degrees);
    }
    std::size_t i = *support.begin();
    if (i >= out.pieces.size())
      throw SplittingError("summand with homology in degree " + std::to_string(i) +
                           ", beyond n - 1 = " + std::to_string(out.n - 1));
    out.pieces[i] = direct_sum(out.pieces[i], summand);
  }
  return out;
}

struct OrthogonalityResult {
  std::size_t i = 0, j = 0;
  bool passed = false;
  QisReport report;
};

/// F_i (.) F_j against F_i[i] when i = j and against 0 otherwise.
inline OrthogonalityResult orthogonality_check(const StablePresheafModel& model, std::size_t i,
                                               std::size_t j) {
  OrthogonalityResult out{i, j, false, {}};
  PresheafComplex product = prune(odot(model.f(i), model.f(j)));
  PresheafComplex expected = i == j ? model.pieces.at(i) : PresheafComplex(model.n);
  out.report = qis_report(product, expected);
  out.passed = out.report.equal;
  return out;
}

namespace detail {
inline void require_model_for(const PresheafComplex& m, const StablePresheafModel& model) {
  if (m.vertex_count() != model.n)
    throw InputError("space model over graphs on " + std::to_string(m.vertex_count()) +
                     " vertices, plane pieces on " + std::to_string(model.n));
}
}  // namespace detail

/// H_degree Conf(n, X x C^p) from a model M of Conf(-, X):
/// M (.) (sum_i F_i[(2p-1) i]) evaluated at K_n.
inline HomologySummary cp_homology(const PresheafComplex& m, const StablePresheafModel& model,
                                   int p, long long degree) {
  if (p < 1) throw InputError("p must be at least 1");
  if (degree < 0) throw InputError("requested degree must be nonnegative");
  detail::require_model_for(m, model);
  PresheafComplex total(model.n);
  for (std::size_t i = 0; i < model.pieces.size(); ++i)
    total = direct_sum(total, prune(odot(m, shift(model.pieces[i], (2 * p - 2) * i))));
  auto hs = chain_homology(evaluate(total, complete(model.n)));
  HomologySummary out;
  out.degree = static_cast<std::size_t>(degree);
  if (out.degree < hs.size()) out = hs[out.degree];
  return out;
}

/// Smallest p >= 1 with 2p > max{b + m/2 + 1, C(n,2) + n d - b - m/2 - 1}.
inline int stabilization_bound(int n, int d, int m, int b) {
  // doubled to keep m/2 integral: 4p > max{2b + m + 2, n(n-1) + 2nd - 2b - m - 2}
  long long rhs = std::max<long long>(2LL * b + m + 2, 1LL * n * (n - 1) + 2LL * n * d - 2LL * b - m - 2);
  long long p = rhs < 0 ? 1 : rhs / 4 + 1;
  return static_cast<int>(std::max<long long>(p, 1));
}

struct StableGroup {
  HomologySummary group;  // degree field holds the degree in M (.) F_{m/2}
  int bound = 1;          // smallest p from which H_{mp+b} equals `group`
};

/// Stable value of H_{mp+b} Conf(n, X x C^p) for large p.  `space_dimension`
/// is dim X, entering the bound through the dimension n dim X of X^n.
inline StableGroup stable_homology(const PresheafComplex& m, const StablePresheafModel& model,
                                   int m_coeff, int b, int space_dimension) {
  if (m_coeff < 0) throw InputError("m must be nonnegative");
  detail::require_model_for(m, model);
  StableGroup out;
  out.bound = stabilization_bound(model.n, space_dimension, m_coeff, b);
  if (m_coeff % 2 == 1) return out;
  const std::size_t i = static_cast<std::size_t>(m_coeff / 2);
  const long long degree = static_cast<long long>(i) + b;
  if (degree < 0) return out;
  out.group.degree = static_cast<std::size_t>(degree);
  if (i >= model.pieces.size()) return out;
  auto hs = chain_homology(evaluate(prune(odot(m, model.f(i))), complete(model.n)));
  if (out.group.degree < hs.size()) out.group = hs[out.group.degree];
  return out;
}

}  // namespace gconf
