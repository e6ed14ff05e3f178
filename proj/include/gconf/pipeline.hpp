#pragma once

#include <gconf/cover_model.hpp>
#include <gconf/pointwise.hpp>
#include <gconf/serialization.hpp>

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gconf {

enum class OutputFormat { table, json };

/// X and Y are letter names (X, Y, Z, O) or paths to JSON files holding a
/// simplicial complex or an already built presheaf model.
struct PipelineConfig {
  int n = 3;
  int subdivisions = 2;
  CoverRule rule = CoverRule::separated;
  std::string x = "Z";
  std::string y = "Z";
  std::optional<std::size_t> max_degree;
  OutputFormat format = OutputFormat::table;
  std::size_t simplex_guard = kDefaultSimplexGuard;
};

struct PipelineResult {
  std::string x;
  std::string y;
  int n = 0;
  std::vector<std::size_t> factor_ranks_x;  // generators per degree of the pruned factor models
  std::vector<std::size_t> factor_ranks_y;
  std::vector<std::size_t> product_ranks;   // after pruning the product
  std::vector<HomologySummary> homology;    // at K_n
  double seconds = 0;
};

inline ModelOptions model_options(const PipelineConfig& cfg) {
  if (cfg.n < 1) throw InputError("n must be at least 1");
  if (cfg.subdivisions < 0) throw InputError("subdivisions must be nonnegative");
  ModelOptions o;
  o.rule = cfg.rule;
  o.subdivisions = cfg.subdivisions;
  o.simplex_guard = cfg.simplex_guard;
  return o;
}

inline bool is_letter(const std::string& s) { return letters().count(s) != 0; }

/// Pruned model of Conf(-, X) for a letter name or a JSON file.
inline PresheafComplex resolve_model(const std::string& source, const PipelineConfig& cfg) {
  if (is_letter(source)) return star_model(letter(source), cfg.n, model_options(cfg));
  Json j = read_json_file(source);
  if (j.contains("degrees")) {
    PresheafComplex c = presheaf_complex_from_json(j);
    if (c.vertex_count() != cfg.n)
      throw InputError("'" + source + "' is a model over graphs on " +
                       std::to_string(c.vertex_count()) + " vertices, expected " +
                       std::to_string(cfg.n));
    return prune(c);
  }
  return star_model(simplicial_complex_from_json(j), cfg.n, model_options(cfg));
}

namespace detail {
inline PipelineResult combine(const std::string& x, const std::string& y, const PresheafComplex& mx,
                              const PresheafComplex& my, const PipelineConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  PipelineResult out;
  out.x = x;
  out.y = y;
  out.n = cfg.n;
  out.factor_ranks_x = mx.ranks();
  out.factor_ranks_y = my.ranks();
  PresheafComplex product = prune(odot(mx, my));
  out.product_ranks = product.ranks();
  EvaluatedComplex at_top = evaluate(product, complete(cfg.n));
  if (cfg.max_degree) at_top = truncate(at_top, *cfg.max_degree + 1);
  out.homology = chain_homology(at_top);
  if (cfg.max_degree && out.homology.size() > *cfg.max_degree + 1)
    out.homology.resize(*cfg.max_degree + 1);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}
}  // namespace detail

/// Homology of Conf(n, X x Y): models of X and Y, union-tensor product,
/// pruning, evaluation at K_n.
inline PipelineResult run_pipeline(const PipelineConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  auto result = detail::combine(cfg.x, cfg.y, resolve_model(cfg.x, cfg), resolve_model(cfg.y, cfg), cfg);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

inline const std::vector<std::pair<std::string, std::string>>& letter_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs{
      {"X", "Y"}, {"X", "Z"}, {"X", "O"}, {"Y", "Y"}, {"Y", "Z"},
      {"Y", "O"}, {"Z", "Z"}, {"Z", "O"}, {"O", "O"}};
  return pairs;
}

/// All nine products of two letters, each factor model built once.
inline std::vector<PipelineResult> letters_table(const PipelineConfig& base = {}) {
  std::map<std::string, PresheafComplex> models;
  std::map<std::string, double> build_seconds;
  for (const auto& [name, x] : letters()) {
    auto start = std::chrono::steady_clock::now();
    models.emplace(name, star_model(x, base.n, model_options(base)));
    build_seconds[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  std::vector<PipelineResult> rows;
  for (const auto& [x, y] : letter_pairs()) {
    rows.push_back(detail::combine(x, y, models.at(x), models.at(y), base));
    rows.back().seconds += build_seconds[x] + (x == y ? 0.0 : build_seconds[y]);
  }
  return rows;
}

/// "(Z, 0, 0, Z^15, Z^230)"
inline std::string format_homology(const std::vector<HomologySummary>& hs) {
  std::string s = "(";
  for (std::size_t i = 0; i < hs.size(); ++i) s += (i ? ", " : "") + format_group(hs[i]);
  return s + ")";
}

inline Json to_json(const PipelineResult& r) {
  return {{"x", r.x},
          {"y", r.y},
          {"n", r.n},
          {"factor_ranks", {r.factor_ranks_x, r.factor_ranks_y}},
          {"product_ranks", r.product_ranks},
          {"homology", to_json(r.homology)},
          {"seconds", r.seconds}};
}

}  // namespace gconf
