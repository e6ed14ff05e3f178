#pragma once

// Small hand-written complexes, in the rows-as-domain layout.

#include <gconf/gconf.hpp>

#include <vector>

namespace fixtures {

using namespace gconf;

inline Graph i12() { return complete(2); }
inline Graph i0() { return empty_graph(2); }

/// Three-open cover of the square of the interval: degree 1 has two
/// generators labeled by the empty graph, degree 0 has {12}, {}, {12}.
inline PresheafComplex interval_cover_model() {
  std::vector<Graph> top{i0(), i0()};
  std::vector<Graph> bottom{i12(), i0(), i12()};
  return PresheafComplex(2, {bottom, top},
                         {LabeledMatrix(top, bottom, {{0, 0, -1}, {0, 1, 1}, {1, 1, -1}, {1, 2, 1}})});
}

/// The pruned interval model: one empty-graph generator mapping by [-1, 1].
inline PresheafComplex pruned_interval_model() {
  std::vector<Graph> top{i0()};
  std::vector<Graph> bottom{i12(), i12()};
  return PresheafComplex(2, {bottom, top}, {LabeledMatrix(top, bottom, {{0, 0, -1}, {0, 1, 1}})});
}

/// Model of the square after applying the union functor (4 + 4 + 1 generators).
inline PresheafComplex square_union_model() {
  std::vector<Graph> d0(4, i12()), d1(4, i12()), d2{i0()};
  return PresheafComplex(
      2, {d0, d1, d2},
      {LabeledMatrix(d1, d0,
                     {{0, 0, -1}, {0, 2, 1}, {1, 1, -1}, {1, 3, 1}, {2, 0, -1}, {2, 1, 1}, {3, 2, -1}, {3, 3, 1}}),
       LabeledMatrix(d2, d1, {{0, 0, -1}, {0, 1, 1}, {0, 2, 1}, {0, 3, -1}})});
}

inline Graph g3(std::vector<std::pair<int, int>> e) { return Graph(3, e); }

/// Projective resolution of the skyscraper at the triangle.
inline PresheafComplex skyscraper_resolution() {
  std::vector<Graph> d0{complete(3)};
  std::vector<Graph> d1{g3({{1, 2}, {1, 3}}), g3({{1, 2}, {2, 3}}), g3({{1, 3}, {2, 3}})};
  std::vector<Graph> d2{g3({{1, 2}}), g3({{1, 3}}), g3({{2, 3}})};
  std::vector<Graph> d3{empty_graph(3)};
  return PresheafComplex(
      3, {d0, d1, d2, d3},
      {LabeledMatrix(d1, d0, {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}}),
       LabeledMatrix(d2, d1, {{0, 0, 1}, {0, 1, -1}, {1, 0, 1}, {1, 2, -1}, {2, 1, 1}, {2, 2, -1}}),
       LabeledMatrix(d3, d2, {{0, 0, 1}, {0, 1, -1}, {0, 2, 1}})});
}

/// Dense matrix of a labeled matrix.
template <typename L>
std::vector<std::vector<Integer>> dense(const BasicLabeledMatrix<L>& m) { return m.matrix().to_dense(); }

}  // namespace fixtures
