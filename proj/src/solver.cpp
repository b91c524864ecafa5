#include "ybg/solver.hpp"

#include <array>
#include <vector>

namespace ybg {

bool wcond_holds(const SixVertexMatrix& u, const SixVertexMatrix& v) {
  if (u.a1.is_zero() || u.a2.is_zero() || v.a1.is_zero() || v.a2.is_zero())
    fail(Errc::DegenerateInput, "wcond needs nonzero a-weights");
  Scalar nu = n_value(u), nv = n_value(v);
  return nu * v.b1 * v.a2 == nv * u.b1 * u.a1 && nu * v.b2 * v.a1 == nv * u.b2 * u.a2;
}

SixVertexMatrix solve_w(const SixVertexMatrix& u, const SixVertexMatrix& v) {
  if (!wcond_holds(u, v))
    fail(Errc::NotComposable, "no six-vertex w with [[u,w,v]] = 0");
  SixVertexMatrix us = star(u);
  return six_vertex(u.a1 * v.a1 - u.b2 * v.b1, u.a2 * v.a2 - u.b1 * v.b2,
                    us.a1 * v.b1 + u.b1 * v.a1, us.a2 * v.b2 + u.b2 * v.a2,
                    u.c1 * v.c1, u.c2 * v.c2);
}

namespace {

// Rows of the linear system: one per nonzero entry of [[u, -, v]] applied to
// the six weight-basis matrices of w.
std::vector<std::array<Scalar, 6>> assemble_system(const SixVertexMatrix& u,
                                                   const SixVertexMatrix& v) {
  auto basis_op = [](int k) {
    OperatorMatrix m(4);
    switch (k) {
      case 0: m.at(0, 0) = 1; break;  // a1
      case 1: m.at(3, 3) = 1; break;  // a2
      case 2: m.at(1, 2) = 1; break;  // b1
      case 3: m.at(2, 1) = 1; break;  // b2
      case 4: m.at(1, 1) = 1; break;  // c1
      case 5: m.at(2, 2) = 1; break;  // c2
    }
    return m;
  };
  OperatorMatrix uo = to_operator(u), vo = to_operator(v);
  std::array<OperatorMatrix, 6> cols = {
      yb_commutator(uo, basis_op(0), vo), yb_commutator(uo, basis_op(1), vo),
      yb_commutator(uo, basis_op(2), vo), yb_commutator(uo, basis_op(3), vo),
      yb_commutator(uo, basis_op(4), vo), yb_commutator(uo, basis_op(5), vo)};

  std::vector<std::array<Scalar, 6>> rows;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      std::array<Scalar, 6> row;
      bool nonzero = false;
      for (int k = 0; k < 6; ++k) {
        row[k] = cols[k].at(i, j);
        nonzero = nonzero || !row[k].is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  return rows;
}

std::vector<std::array<Scalar, 6>> nullspace(std::vector<std::array<Scalar, 6>> a) {
  constexpr int kCols = 6;
  std::vector<int> pivots;
  size_t rank = 0;
  for (int c = 0; c < kCols && rank < a.size(); ++c) {
    size_t p = rank;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[rank], a[p]);
    Scalar inv_pivot = inverse(a[rank][c]);
    for (int j = 0; j < kCols; ++j) a[rank][j] *= inv_pivot;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (int j = 0; j < kCols; ++j) a[i][j] -= f * a[rank][j];
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<std::array<Scalar, 6>> basis;
  for (int c = 0; c < kCols; ++c) {
    bool is_pivot = false;
    for (int pc : pivots) is_pivot = is_pivot || pc == c;
    if (is_pivot) continue;
    std::array<Scalar, 6> vec{};
    vec[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) vec[pivots[i]] = -a[i][c];
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace

int brute_force_equation_count(const SixVertexMatrix& u, const SixVertexMatrix& v) {
  return static_cast<int>(assemble_system(u, v).size());
}

BruteForceResult brute_force_w(const SixVertexMatrix& u, const SixVertexMatrix& v) {
  auto basis = nullspace(assemble_system(u, v));
  int nullity = static_cast<int>(basis.size());
  if (nullity == 0) return {BruteForceResult::Kind::Absent, 0, std::nullopt};
  if (nullity >= 2) return {BruteForceResult::Kind::MultiDimensional, nullity, std::nullopt};

  const auto& g = basis.front();  // (a1, a2, b1, b2, c1, c2)
  if (g[4].is_zero() || g[5].is_zero())
    return {BruteForceResult::Kind::Absent, 1, std::nullopt};
  Scalar lambda = (u.c1 * v.c1) / g[4];
  SixVertexMatrix w = six_vertex(lambda * g[0], lambda * g[1], lambda * g[2],
                                 lambda * g[3], lambda * g[4], lambda * g[5]);
  return {BruteForceResult::Kind::Ray, 1, w};
}

}  // namespace ybg
