#pragma once

#include <gconf/pointwise.hpp>
#include <gconf/prune.hpp>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace gconf {

/// Polynomial in the shift variable s with nonnegative integer coefficients;
/// the coefficient of s^k counts copies shifted up by k.
class ShiftPoly {
 public:
  ShiftPoly() = default;
  ShiftPoly(std::initializer_list<int> coeffs) {
    for (int c : coeffs) {
      if (c < 0) throw InputError("shift polynomials have nonnegative coefficients");
      c_.emplace_back(c);
    }
    trim();
  }
  explicit ShiftPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
    for (const auto& c : c_)
      if (c < 0) throw InputError("shift polynomials have nonnegative coefficients");
    trim();
  }

  static ShiftPoly monomial(std::size_t k, Integer coeff = 1) {
    std::vector<Integer> c(k + 1);
    c[k] = std::move(coeff);
    return ShiftPoly(std::move(c));
  }

  const std::vector<Integer>& coefficients() const { return c_; }
  Integer coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  bool is_zero() const { return c_.empty(); }

  friend ShiftPoly operator+(const ShiftPoly& a, const ShiftPoly& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return ShiftPoly(std::move(c));
  }

  friend ShiftPoly operator*(const ShiftPoly& a, const ShiftPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return ShiftPoly(std::move(c));
  }

  friend bool operator==(const ShiftPoly&, const ShiftPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

inline std::string to_string(const ShiftPoly& p) {
  std::string out;
  for (std::size_t k = p.coefficients().size(); k-- > 0;) {
    const Integer& c = p.coefficients()[k];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (c != 1 || k == 0) out += c.str();
    if (k >= 1) out += "s";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

/// Multiplicities with shift of the blocks A, B, C, D.
struct BuildingBlockVector {
  ShiftPoly a, b, c, d;
  friend bool operator==(const BuildingBlockVector&, const BuildingBlockVector&) = default;
};

using TransferMatrix = std::array<std::array<ShiftPoly, 4>, 4>;

/// Action of multiplication by the rank-one model on (a, b, c, d).
inline TransferMatrix transfer_matrix() {
  return {{{ShiftPoly{1, 2, 1}, ShiftPoly{0, 2, 1}, ShiftPoly{0, 0, 1}, ShiftPoly{0, 0, 3, 3}},
           {ShiftPoly{}, ShiftPoly{0, 0, 1}, ShiftPoly{0, 0, 1}, ShiftPoly{}},
           {ShiftPoly{}, ShiftPoly{}, ShiftPoly{0, 0, 1}, ShiftPoly{}},
           {ShiftPoly{}, ShiftPoly{1}, ShiftPoly{}, ShiftPoly{0, 1, 1}}}};
}

inline BuildingBlockVector transfer_step(const BuildingBlockVector& v) {
  const auto m = transfer_matrix();
  const std::array<ShiftPoly, 4> in{v.a, v.b, v.c, v.d};
  std::array<ShiftPoly, 4> out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] = out[i] + m[i][j] * in[j];
  return {out[0], out[1], out[2], out[3]};
}

/// beta_p indexed by p, trailing zeros trimmed.
using BettiTable = std::vector<Integer>;

/// Betti numbers of Conf(3, T^r)/T^r from the transfer matrix:
/// (1,1,0,0) . M^(r-1) . (1,1,1,0)^T.
inline BettiTable torus_betti(int r) {
  if (r < 1) throw InputError("torus rank must be at least 1");
  BuildingBlockVector v{ShiftPoly{1}, ShiftPoly{1}, ShiftPoly{1}, ShiftPoly{}};
  for (int k = 1; k < r; ++k) v = transfer_step(v);
  return (v.a + v.b).coefficients();
}

inline Integer binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

inline BettiTable closed_formula_betti(int r) {
  if (r < 1) throw InputError("torus rank must be at least 1");
  BettiTable out(static_cast<std::size_t>(2 * r - 1));
  for (int p = 0; p < 2 * r - 2; ++p) out[p] = binomial(2 * r, p) - 3 * binomial(r, p - r);
  out[2 * r - 2] = Integer(r) * (r + 3) / 2;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

struct BuildingBlocks {
  PresheafComplex a, b, c, d;
};

namespace detail {
inline Graph g3(const std::vector<std::pair<int, int>>& edges) { return Graph(3, edges); }
}  // namespace detail

/// A = K3[0]; B = three two-edge graphs in degree 1 mapping by ones to K3 in
/// degree 0; C = (empty graph)[2]; D = the three two-edge graphs in degree 2.
inline BuildingBlocks building_blocks() {
  using detail::g3;
  const Graph k3 = complete(3);
  const Graph t1323 = g3({{1, 3}, {2, 3}});
  const Graph t1223 = g3({{1, 2}, {2, 3}});
  const Graph t1213 = g3({{1, 2}, {1, 3}});
  BuildingBlocks out;
  out.a = PresheafComplex(3, {{k3}}, {});
  std::vector<Graph> twos{t1323, t1223, t1213};
  out.b = PresheafComplex(3, {{k3}, twos},
                          {LabeledMatrix(twos, {k3}, {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}})});
  out.c = PresheafComplex(3, {{}, {}, {empty_graph(3)}}, {});
  out.d = PresheafComplex(3, {{}, {}, twos}, {});
  return out;
}

/// The pruned rank-one model M (Conf(-, T)/T over graphs on 3 vertices):
/// K3, K3 in degree 0; the three two-edge graphs in degree 1, all mapping
/// to the second K3; the empty graph in degree 2 with zero differential.
inline PresheafComplex torus_model() {
  using detail::g3;
  const Graph k3 = complete(3);
  std::vector<Graph> twos{g3({{1, 3}, {2, 3}}), g3({{1, 2}, {2, 3}}), g3({{1, 2}, {1, 3}})};
  std::vector<Graph> top{empty_graph(3)};
  return PresheafComplex(3, {{k3, k3}, twos, top},
                         {LabeledMatrix(twos, {k3, k3}, {{0, 1, 1}, {1, 1, 1}, {2, 1, 1}}),
                          LabeledMatrix(top, twos)});
}

/// Facets of the nerve of the 13-set hexagon cover from which M was pruned.
/// Kept as reference data; the graph labels of the sets are not recorded.
inline const std::vector<std::string>& hexagon_nerve_facets() {
  static const std::vector<std::string> facets{
      "AEC", "BDF", "AHX", "AHS", "BHS",  "BHY",  "CHY",  "CHT",  "DHX",  "DHU",
      "EHU", "EHZ", "FHT", "FHZ", "BFSZ", "AESZ", "BDUY", "CEUY", "ACTX", "DFTX"};
  return facets;
}

struct MultiplicationCheck {
  std::string cell;      // e.g. "B*D"
  std::string expected;  // e.g. "D[1] + A[3]^3"
  bool passed = false;
  QisReport report;
};

inline std::vector<MultiplicationCheck> verify_multiplication_table() {
  auto bl = building_blocks();
  const PresheafComplex& A = bl.a;
  const PresheafComplex& B = bl.b;
  const PresheafComplex& C = bl.c;
  const PresheafComplex& D = bl.d;
  struct Cell {
    const char* left;
    const PresheafComplex* x;
    const char* right;
    const PresheafComplex* y;
    const char* expected;
    PresheafComplex rhs;
  };
  std::vector<Cell> cells{
      {"A", &A, "A", &A, "A", A},
      {"A", &A, "B", &B, "A[1]^2", power(shift(A, 1), 2)},
      {"A", &A, "C", &C, "A[2]", shift(A, 2)},
      {"A", &A, "D", &D, "A[2]^3", power(shift(A, 2), 3)},
      {"B", &B, "A", &A, "A[1]^2", power(shift(A, 1), 2)},
      {"B", &B, "B", &B, "D + A[2]", direct_sum(D, shift(A, 2))},
      {"B", &B, "C", &C, "B[2]", shift(B, 2)},
      {"B", &B, "D", &D, "D[1] + A[3]^3", direct_sum(shift(D, 1), power(shift(A, 3), 3))},
      {"C", &C, "A", &A, "A[2]", shift(A, 2)},
      {"C", &C, "B", &B, "B[2]", shift(B, 2)},
      {"C", &C, "C", &C, "C[2]", shift(C, 2)},
      {"C", &C, "D", &D, "D[2]", shift(D, 2)},
  };
  std::vector<MultiplicationCheck> out;
  for (const auto& cell : cells) {
    MultiplicationCheck check;
    check.cell = std::string(cell.left) + "*" + cell.right;
    check.expected = cell.expected;
    check.report = qis_report(prune(odot(*cell.x, *cell.y)), cell.rhs);
    check.passed = check.report.equal;
    out.push_back(std::move(check));
  }
  return out;
}

inline constexpr int kDirectTorusGuard = 3;

/// Homology at K3 of the r-fold union-tensor power of the rank-one model,
/// pruning after every product.
inline std::vector<HomologySummary> direct_torus_homology(int r, int guard = kDirectTorusGuard) {
  if (r < 1) throw InputError("torus rank must be at least 1");
  if (r > guard)
    throw ResourceError("direct torus computation limited to r <= " + std::to_string(guard));
  const PresheafComplex m = torus_model();
  PresheafComplex power_r = m;
  for (int k = 1; k < r; ++k) power_r = prune(odot(power_r, m));
  return homology_at(power_r, complete(3));
}

}  // namespace gconf
