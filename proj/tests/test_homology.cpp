#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace gconf;
using Dense = std::vector<std::vector<Integer>>;

namespace {

std::vector<Integer> factors(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

Dense random_dense(oracle::Random& rng, std::size_t m, std::size_t n, int lo, int hi) {
  Dense a(m, std::vector<Integer>(n));
  for (auto& row : a)
    for (auto& v : row) v = rng.uniform(lo, hi);
  return a;
}

EvaluatedComplex from_dense_chain(std::vector<std::size_t> ranks, std::vector<Dense> diffs) {
  EvaluatedComplex c;
  c.ranks = std::move(ranks);
  for (const auto& d : diffs) c.differentials.push_back(IntegerMatrix::from_dense(d));
  return c;
}

}  // namespace

TEST_CASE("smith of small fixed matrices") {
  auto id = smith(IntegerMatrix::from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(id.invariant_factors == factors({1, 1, 1}));
  CHECK(id.rank == 3);
  auto d = smith(IntegerMatrix::from_dense({{2, 0}, {0, 3}}));
  CHECK(d.invariant_factors == factors({1, 6}));
  auto z = smith(IntegerMatrix(3, 4));
  CHECK(z.rank == 0);
  CHECK(z.invariant_factors.empty());
  auto mixed = smith(IntegerMatrix::from_dense({{4, 0, 0}, {0, 6, 0}, {0, 0, 10}}));
  CHECK(mixed.invariant_factors == factors({2, 2, 60}));
}

TEST_CASE("smith agrees with gcds of minors on random small matrices") {
  oracle::Random rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t m = static_cast<std::size_t>(rng.uniform(1, 5)), n = static_cast<std::size_t>(rng.uniform(1, 5));
    Dense a = random_dense(rng, m, n, -3, 3);
    auto got = smith(IntegerMatrix::from_dense(a));
    auto want = oracle::minors_invariant_factors(a);
    CHECK(got.invariant_factors == want);
    CHECK(got.rank == oracle::rank(a));
  }
}

TEST_CASE("smith agrees with gcds of minors when no entry is a unit") {
  oracle::Random rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t m = static_cast<std::size_t>(rng.uniform(2, 5)), n = static_cast<std::size_t>(rng.uniform(2, 5));
    Dense a = random_dense(rng, m, n, -3, 3);
    for (auto& row : a)
      for (auto& v : row)
        if (is_unit(v)) v *= rng.coin() ? 2 : 3;
    CHECK(smith(IntegerMatrix::from_dense(a)).invariant_factors == oracle::minors_invariant_factors(a));
  }
}

TEST_CASE("sparse pivoting on large matrices without unit entries") {
  // 2x2 blocks on the diagonal: the invariants multiply to the product of
  // the blocks' invariants, one factor per nonzero block factor
  oracle::Random rng(3);
  const std::size_t blocks = 130;
  std::vector<Triplet> e;
  Integer product = 1;
  std::size_t nonsingular = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    Dense blk = random_dense(rng, 2, 2, 2, 9);
    auto f = oracle::minors_invariant_factors(blk);
    for (const auto& v : f) product *= v;
    nonsingular += f.size();
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) e.push_back({2 * b + i, 2 * b + j, blk[i][j]});
  }
  IntegerMatrix m(2 * blocks, 2 * blocks, e);
  auto s = smith(m);
  CHECK(s.rank == nonsingular);
  Integer got = 1;
  for (const auto& v : s.invariant_factors) got *= v;
  CHECK(got == product);
  for (std::size_t i = 1; i < s.invariant_factors.size(); ++i)
    CHECK(s.invariant_factors[i] % s.invariant_factors[i - 1] == 0);
}

TEST_CASE("sparse and dense paths agree") {
  // the same 3x3 block repeated: the answer is the block's factors, repeated
  oracle::Random rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    Dense blk = random_dense(rng, 3, 3, -6, 6);
    for (auto& row : blk)
      for (auto& v : row)
        if (is_unit(v)) v = 4;
    auto f = oracle::minors_invariant_factors(blk);
    std::vector<Triplet> e;
    const std::size_t copies = 80;
    for (std::size_t b = 0; b < copies; ++b)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) e.push_back({3 * b + i, 3 * b + j, blk[i][j]});
    auto s = smith(IntegerMatrix(3 * copies, 3 * copies, e));
    std::vector<Integer> want;
    for (const auto& v : f) want.insert(want.end(), copies, v);
    std::sort(want.begin(), want.end());
    CHECK(s.invariant_factors == want);
  }
}

TEST_CASE("multiplication by two gives Z/2") {
  auto hs = chain_homology(from_dense_chain({1, 1}, {{{2}}}));
  REQUIRE(hs.size() == 2);
  CHECK(hs[0].betti == 0);
  CHECK(hs[0].torsion == factors({2}));
  CHECK(is_zero(hs[1]));
  CHECK(format_group(hs[0]) == "Z/2");
}

TEST_CASE("triangle boundary is a circle") {
  std::vector<std::vector<int>> simplices{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}};
  auto hs = chain_homology(oracle::simplicial_chains(simplices));
  REQUIRE(hs.size() == 2);
  CHECK(format_group(hs[0]) == "Z");
  CHECK(format_group(hs[1]) == "Z");
}

TEST_CASE("projective plane has Z/2 in degree one") {
  // six-vertex triangulation
  std::vector<std::vector<int>> facets{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                       {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
  std::set<std::vector<int>> all;
  for (auto f : facets)
    for (unsigned bits = 1; bits < 8; ++bits) {
      std::vector<int> s;
      for (int k = 0; k < 3; ++k)
        if (bits >> k & 1) s.push_back(f[k]);
      all.insert(s);
    }
  auto ev = oracle::simplicial_chains(std::vector<std::vector<int>>(all.begin(), all.end()));
  auto hs = chain_homology(ev);
  REQUIRE(hs.size() == 3);
  CHECK(format_group(hs[0]) == "Z");
  CHECK(format_group(hs[1]) == "Z/2");
  CHECK(format_group(hs[2]) == "0");
  CHECK(hs == oracle::homology(ev));
}

TEST_CASE("chain homology rejects non-complexes") {
  auto bad = from_dense_chain({1, 1, 1}, {{{1}}, {{1}}});
  CHECK_THROWS_AS(chain_homology(bad), InputError);
  EvaluatedComplex wrong_shape;
  wrong_shape.ranks = {2, 1};
  wrong_shape.differentials.push_back(IntegerMatrix(1, 3));
  CHECK_THROWS_AS(chain_homology(wrong_shape), InputError);
}

TEST_CASE("group formatting") {
  HomologySummary h;
  CHECK(format_group(h) == "0");
  h.betti = 3;
  h.torsion = factors({2});
  CHECK(format_group(h) == "Z^3 + Z/2");
  h.betti = 1;
  h.torsion.clear();
  CHECK(format_group(h) == "Z");
}

TEST_CASE("random chain complexes: ranks, Euler characteristic and the oracle") {
  // d_1 = p q factors through Z^2; the columns of d_0 are multiples of a
  // cross product of the rows of q, so d_1 d_0 = 0
  oracle::Random rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t c0 = static_cast<std::size_t>(rng.uniform(1, 4)), c1 = static_cast<std::size_t>(rng.uniform(1, 4)),
                c2 = static_cast<std::size_t>(rng.uniform(1, 4));
    Dense p = random_dense(rng, c2, 2, -2, 2), q = random_dense(rng, 2, c1, -2, 2);
    Dense b(c2, std::vector<Integer>(c1));
    for (std::size_t i = 0; i < c2; ++i)
      for (std::size_t j = 0; j < c1; ++j)
        for (std::size_t k = 0; k < 2; ++k) b[i][j] += p[i][k] * q[k][j];
    Dense a(c1, std::vector<Integer>(c0));
    for (std::size_t col = 0; col < c0; ++col) {
      std::vector<Integer> v(c1);
      if (c1 >= 3) {
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(c1) - 3));
        v[i] = q[0][i + 1] * q[1][i + 2] - q[0][i + 2] * q[1][i + 1];
        v[i + 1] = q[0][i + 2] * q[1][i] - q[0][i] * q[1][i + 2];
        v[i + 2] = q[0][i] * q[1][i + 1] - q[0][i + 1] * q[1][i];
      }
      Integer scale = rng.uniform(-2, 2);
      for (std::size_t r = 0; r < c1; ++r) a[r][col] = v[r] * scale;
    }
    auto ev = from_dense_chain({c0, c1, c2}, {a, b});
    REQUIRE_NOTHROW(check_chain_complex(ev));
    auto hs = chain_homology(ev);
    CHECK(hs == oracle::homology(ev));
    long long euler_chain = static_cast<long long>(c0) - static_cast<long long>(c1) + static_cast<long long>(c2);
    long long euler_h = 0;
    for (const auto& h : hs) euler_h += (h.degree % 2 ? -1 : 1) * static_cast<long long>(h.betti);
    CHECK(euler_h == euler_chain);
  }
}
