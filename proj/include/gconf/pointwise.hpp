#pragma once

#include <gconf/homology.hpp>
#include <gconf/presheaf_complex.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gconf {

using PointwiseHomology = std::map<Graph, std::vector<HomologySummary>>;

namespace detail {
/// Homology with the zero groups above the last nonzero one removed, so that
/// complexes of different lengths compare by their homology alone.
inline std::vector<HomologySummary> trimmed(std::vector<HomologySummary> hs) {
  while (!hs.empty() && is_zero(hs.back())) hs.pop_back();
  return hs;
}
}  // namespace detail

inline std::vector<HomologySummary> homology_at(const PresheafComplex& c, const Graph& g) {
  return detail::trimmed(chain_homology(evaluate(c, g)));
}

/// Homology of the value at every graph on n vertices.
inline PointwiseHomology pointwise_homology(const PresheafComplex& c,
                                            int guard = kDefaultEnumerationGuard) {
  PointwiseHomology out;
  for (const auto& g : enumerate_graphs(c.vertex_count(), guard)) out.emplace(g, homology_at(c, g));
  return out;
}

struct QisReport {
  bool equal = true;
  std::optional<Graph> graph;  // first graph where the two differ
  std::vector<HomologySummary> left;
  std::vector<HomologySummary> right;

  std::string describe() const {
    if (equal) return "pointwise homology agrees";
    auto fmt = [](const std::vector<HomologySummary>& hs) {
      std::string s = "(";
      for (std::size_t i = 0; i < hs.size(); ++i) s += (i ? ", " : "") + format_group(hs[i]);
      return s + ")";
    };
    return "at " + to_string(*graph) + ": " + fmt(left) + " vs " + fmt(right);
  }
};

/// Compares pointwise homology at every graph; stops at the first difference.
inline QisReport qis_report(const PresheafComplex& a, const PresheafComplex& b,
                            int guard = kDefaultEnumerationGuard) {
  if (a.vertex_count() != b.vertex_count())
    throw InputError("qis_test: complexes over graphs on " + std::to_string(a.vertex_count()) +
                     " and " + std::to_string(b.vertex_count()) + " vertices");
  QisReport report;
  for (const auto& g : enumerate_graphs(a.vertex_count(), guard)) {
    auto ha = homology_at(a, g);
    auto hb = homology_at(b, g);
    if (ha != hb) {
      report.equal = false;
      report.graph = g;
      report.left = std::move(ha);
      report.right = std::move(hb);
      return report;
    }
  }
  return report;
}

/// Necessary condition for a quasi-isomorphism of diagrams.
inline bool qis_test(const PresheafComplex& a, const PresheafComplex& b,
                     int guard = kDefaultEnumerationGuard) {
  return qis_report(a, b, guard).equal;
}

}  // namespace gconf
