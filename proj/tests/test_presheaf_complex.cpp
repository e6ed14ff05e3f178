#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gconf;
using fixtures::dense;
using fixtures::g3;
using Dense = std::vector<std::vector<Integer>>;

namespace {

Dense ints(std::initializer_list<std::initializer_list<int>> rows) {
  Dense out;
  for (auto r : rows) {
    out.emplace_back();
    for (int v : r) out.back().emplace_back(v);
  }
  return out;
}

Dense permute_rows(const Dense& m, const std::vector<std::size_t>& order) {
  Dense out;
  for (auto i : order) out.push_back(m[i]);
  return out;
}

Dense permute_cols(const Dense& m, const std::vector<std::size_t>& order) {
  Dense out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto j : order) out[i].push_back(m[i][j]);
  return out;
}

Dense negate(Dense m) {
  for (auto& r : m)
    for (auto& v : r) v = -v;
  return m;
}

bool same(const EvaluatedComplex& a, const EvaluatedComplex& b) {
  return a.ranks == b.ranks && a.differentials == b.differentials;
}

EvaluatedComplex sum(const EvaluatedComplex& a, const EvaluatedComplex& b) {
  EvaluatedComplex out;
  std::size_t top = std::max(a.ranks.size(), b.ranks.size());
  for (std::size_t d = 0; d < top; ++d) out.ranks.push_back(a.rank(d) + b.rank(d));
  for (std::size_t d = 0; d + 1 < top; ++d) {
    std::vector<Triplet> e;
    if (d < a.differentials.size()) e = a.differentials[d].entries();
    if (d < b.differentials.size())
      for (const auto& t : b.differentials[d].entries()) e.push_back({t.row + a.rank(d + 1), t.col + a.rank(d), t.value});
    out.differentials.emplace_back(out.ranks[d + 1], out.ranks[d], std::move(e));
  }
  return out;
}

const PresheafComplex kBlockB = building_blocks().b;

}  // namespace

TEST_CASE("the skyscraper resolution is a valid complex") {
  auto c = fixtures::skyscraper_resolution();
  CHECK(validate(c).ok());
  // its only homology is Z at the triangle, in degree 0
  for (const auto& [g, hs] : pointwise_homology(c)) {
    if (g == complete(3)) {
      REQUIRE(hs.size() == 1);
      CHECK(hs[0].betti == 1);
    } else {
      CHECK(hs.empty());
    }
  }
}

TEST_CASE("overwriting a forced zero is reported at its coordinate") {
  auto c = fixtures::skyscraper_resolution();
  auto entries = c.differential(1).entries();
  entries.push_back({0, 2, 1});  // {12} -> {13,23}
  std::vector<LabeledMatrix> diffs = c.differentials();
  diffs[1] = LabeledMatrix(c.labels(2), c.labels(1), entries);
  PresheafComplex broken(3, c.degrees(), diffs);
  auto diag = validate(broken);
  REQUIRE_FALSE(diag.ok());
  bool found = false;
  for (const auto& v : diag.violations)
    if (v.kind == Violation::Kind::forced_zero && v.differential == 1 && v.row == 0 && v.col == 2) found = true;
  CHECK(found);
  CHECK_THROWS_AS(require_valid(broken, "test"), InputError);
}

TEST_CASE("a unit map followed by itself fails d^2 = 0") {
  std::vector<Graph> one{complete(2)};
  PresheafComplex c(2, {one, one, one}, {LabeledMatrix(one, one, {{0, 0, 1}}), LabeledMatrix(one, one, {{0, 0, 1}})});
  auto diag = validate(c);
  REQUIRE(diag.violations.size() == 1);
  CHECK(diag.violations[0].kind == Violation::Kind::nonzero_square);
}

TEST_CASE("shift") {
  auto c = fixtures::pruned_interval_model();
  CHECK(shift(c, 0) == c);
  PresheafComplex point(3, {{complete(3)}}, {});
  auto moved = shift(point, 2);
  CHECK(moved.ranks() == std::vector<std::size_t>{0, 0, 1});
  CHECK(moved.labels(2)[0] == complete(3));
  CHECK(shift(shift(c, 1), 1) == shift(c, 2));
  CHECK(unshift(shift(c, 3), 3) == c);
  CHECK_THROWS_AS(unshift(c, 1), InputError);
}

TEST_CASE("direct sum") {
  auto c = fixtures::pruned_interval_model();
  CHECK(direct_sum(c, PresheafComplex(2)) == c);
  CHECK(direct_sum(PresheafComplex(2), c) == c);
  auto s = direct_sum(c, fixtures::interval_cover_model());
  CHECK(s.ranks() == std::vector<std::size_t>{5, 3});
  CHECK(validate(s).ok());
  CHECK_THROWS_AS(direct_sum(c, PresheafComplex(3)), InputError);

  // the three summands of the rank-one torus model
  auto bl = building_blocks();
  auto abc = direct_sum(bl.a, direct_sum(bl.b, bl.c));
  auto m = torus_model();
  for (std::size_t d = 0; d < 3; ++d) {
    auto x = abc.labels(d), y = m.labels(d);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    CHECK(x == y);
  }
}

TEST_CASE("outer tensor product of the pruned interval model with itself") {
  auto c = fixtures::pruned_interval_model();
  auto t = boxtimes(c, c);
  REQUIRE(t.ranks() == std::vector<std::size_t>{4, 4, 1});
  const GraphPair top{fixtures::i0(), fixtures::i0()};
  const GraphPair left{fixtures::i12(), fixtures::i0()}, right{fixtures::i0(), fixtures::i12()};
  CHECK(t.labels(2) == std::vector<GraphPair>{top});
  // degree 1 lists C_0 (x) D_1 before C_1 (x) D_0
  CHECK(t.labels(1) == std::vector<GraphPair>{left, left, right, right});
  for (const auto& l : t.labels(0)) CHECK(l == GraphPair{fixtures::i12(), fixtures::i12()});

  // displayed matrices, with degree-1 generators in the order (x0,y0,x1,y1)
  Dense ref_top = ints({{-1, 1, 1, -1}});
  Dense ref_bottom = ints({{-1, 0, 1, 0}, {0, -1, 0, 1}, {-1, 1, 0, 0}, {0, 0, -1, 1}});
  const std::vector<std::size_t> order{2, 3, 0, 1};
  CHECK(dense(t.differential(0)) == permute_rows(ref_bottom, order));
  // opposite Koszul convention: the degree-2 generator differs by a sign
  CHECK(dense(t.differential(1)) == negate(permute_cols(ref_top, order)));
  CHECK(validate(t).ok());
}

TEST_CASE("union-tensor product of the pruned interval model with itself") {
  auto c = fixtures::pruned_interval_model();
  auto u = odot(c, c);
  CHECK(u == union_labels(boxtimes(c, c)));
  CHECK(u.labels(2) == std::vector<Graph>{fixtures::i0()});
  CHECK(u.labels(1) == std::vector<Graph>(4, fixtures::i12()));
  CHECK(u.labels(0) == std::vector<Graph>(4, fixtures::i12()));
  auto expected = fixtures::square_union_model();
  CHECK(dense(u.differential(0)) == permute_rows(dense(expected.differential(0)), {2, 3, 0, 1}));
  CHECK(dense(u.differential(1)) == negate(permute_cols(dense(expected.differential(1)), {2, 3, 0, 1})));
  CHECK(qis_test(u, expected));
}

TEST_CASE("tensoring with a single representable keeps the matrices") {
  auto c = fixtures::interval_cover_model();
  PresheafComplex unit(2, {{fixtures::i12()}}, {});
  auto t = boxtimes(c, unit);
  REQUIRE(t.ranks() == c.ranks());
  for (std::size_t d = 0; d < c.degree_count(); ++d)
    for (std::size_t i = 0; i < c.rank(d); ++i) CHECK(t.labels(d)[i] == GraphPair{c.labels(d)[i], fixtures::i12()});
  CHECK(t.differential(0).matrix() == c.differential(0).matrix());
}

TEST_CASE("tensor ranks are convolutions") {
  oracle::Random rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = oracle::random_complex(rng, 3), b = oracle::random_complex(rng, 3);
    auto t = boxtimes(a, b);
    for (std::size_t k = 0; k < t.degree_count(); ++k) {
      std::size_t want = 0;
      for (std::size_t i = 0; i <= k; ++i) want += a.rank(i) * b.rank(k - i);
      CHECK(t.rank(k) == want);
    }
  }
  CHECK_THROWS_AS(odot(PresheafComplex(2, {{complete(2)}}, {}), PresheafComplex(3, {{complete(3)}}, {})), InputError);
}

TEST_CASE("the square model at the complete graph is a circle") {
  auto ev = evaluate(fixtures::square_union_model(), complete(2));
  REQUIRE(ev.ranks == std::vector<std::size_t>{4, 4});
  CHECK(ev.differentials[0].to_dense() ==
        ints({{-1, 0, 1, 0}, {0, -1, 0, 1}, {-1, 1, 0, 0}, {0, 0, -1, 1}}));
  CHECK(oracle::betti(ev) == std::vector<std::size_t>{1, 1});
  auto hs = chain_homology(ev);
  CHECK(format_group(hs[0]) == "Z");
  CHECK(format_group(hs[1]) == "Z");
}

TEST_CASE("evaluation at the empty graph keeps every generator") {
  oracle::Random rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = oracle::random_complex(rng, 3);
    auto ev = evaluate(c, empty_graph(3));
    CHECK(ev.ranks == c.ranks());
    for (std::size_t d = 0; d < ev.differentials.size(); ++d) CHECK(ev.differentials[d] == c.differential(d).matrix());
  }
  CHECK_THROWS_AS(evaluate(fixtures::pruned_interval_model(), complete(3)), InputError);
}

TEST_CASE("the pruned interval model at the complete graph is two points") {
  auto ev = evaluate(fixtures::pruned_interval_model(), complete(2));
  CHECK(ev.ranks == std::vector<std::size_t>{2});
  // components of the separated pairs in a path with three vertices
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      if (std::abs(a - b) >= 2) pairs.push_back({a, b});
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (std::abs(pairs[i].first - pairs[j].first) + std::abs(pairs[i].second - pairs[j].second) == 1)
        edges.push_back({i, j});
  CHECK(oracle::component_count(pairs.size(), edges) == chain_homology(ev)[0].betti);
}

TEST_CASE("pointwise homology of single representables") {
  for (const auto& top : enumerate_graphs(3)) {
    PresheafComplex c(3, {{top}}, {});
    for (const auto& [g, hs] : pointwise_homology(c)) {
      if (is_subgraph(g, top)) {
        REQUIRE(hs.size() == 1);
        CHECK(hs[0].betti == 1);
      } else {
        CHECK(hs.empty());
      }
    }
  }
  for (const auto& [g, hs] : pointwise_homology(building_blocks().a)) CHECK(format_group(hs.at(0)) == "Z");
  auto at_top = homology_at(kBlockB, complete(3));
  REQUIRE(at_top.size() == 1);
  CHECK(format_group(at_top[0]) == "Z");
  CHECK_THROWS_AS(pointwise_homology(PresheafComplex(6, {{complete(6)}}, {})), ResourceError);
}

TEST_CASE("quasi-isomorphism test") {
  auto c = fixtures::interval_cover_model();
  CHECK(qis_test(c, c));
  CHECK(qis_test(c, prune(c)));
  auto bl = building_blocks();
  auto report = qis_report(bl.a, bl.b);
  CHECK_FALSE(report.equal);
  CHECK(*report.graph == empty_graph(3));
  CHECK_THROWS_AS(qis_test(c, bl.a), InputError);
}

TEST_CASE("union-tensor is commutative and associative up to pointwise homology") {
  oracle::Random rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    int n = trial % 2 ? 3 : 2;
    auto a = oracle::random_complex(rng, n), b = oracle::random_complex(rng, n),
         c = oracle::random_complex(rng, n);
    CHECK(qis_test(odot(a, b), odot(b, a)));
    CHECK(qis_test(odot(odot(a, b), c), odot(a, odot(b, c))));
    CHECK(qis_test(odot(a, direct_sum(b, c)), direct_sum(odot(a, b), odot(a, c))));
  }
}

TEST_CASE("union-tensor with a shifted factor is the shifted product") {
  oracle::Random rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = oracle::random_complex(rng, 3), b = oracle::random_complex(rng, 3);
    for (std::size_t k : {1u, 2u, 3u}) CHECK(odot(a, shift(b, k)) == shift(odot(a, b), k));
  }
}

TEST_CASE("evaluation commutes with direct sums and shifts") {
  oracle::Random rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = oracle::random_complex(rng, 3), b = oracle::random_complex(rng, 3);
    for (const auto& g : enumerate_graphs(3)) {
      CHECK(same(evaluate(direct_sum(a, b), g), sum(evaluate(a, g), evaluate(b, g))));
      auto shifted = evaluate(shift(a, 2), g);
      auto plain = evaluate(a, g);
      if (plain.ranks.empty()) {
        CHECK(shifted.ranks.empty());
        continue;
      }
      REQUIRE(shifted.ranks.size() == plain.ranks.size() + 2);
      CHECK(shifted.ranks[0] == 0);
      CHECK(shifted.ranks[1] == 0);
      for (std::size_t d = 0; d < plain.differentials.size(); ++d)
        CHECK(shifted.differentials[d + 2] == plain.differentials[d]);
    }
  }
}

TEST_CASE("every operation returns a valid complex") {
  oracle::Random rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 2;
    auto a = oracle::random_complex(rng, n), b = oracle::random_complex(rng, n);
    CHECK(validate(a).ok());
    CHECK(validate(shift(a, 2)).ok());
    CHECK(validate(direct_sum(a, b)).ok());
    CHECK(validate(boxtimes(a, b)).ok());
    CHECK(validate(odot(a, b)).ok());
    CHECK(validate(prune(odot(a, b))).ok());
    CHECK(validate(prune_smith(a)).ok());
    for (const auto& g : enumerate_graphs(n)) CHECK_NOTHROW(check_chain_complex(evaluate(a, g)));
  }
}
