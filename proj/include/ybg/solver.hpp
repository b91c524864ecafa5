#pragma once

#include <optional>

#include "ybg/operator_matrix.hpp"
#include "ybg/six_vertex.hpp"

namespace ybg {

// Cross-multiplied compatibility condition for a six-vertex w with
// [[u, w, v]] = 0:  N(u) b1(v) a2(v) = N(v) b1(u) a1(u)  and
//                   N(u) b2(v) a1(v) = N(v) b2(u) a2(u).
// Stated without divisions so it is valid on every boundary stratum.
bool wcond_holds(const SixVertexMatrix& u, const SixVertexMatrix& v);  // DegenerateInput

// The unique normalized solution: c1(w) = c1(u)c1(v), c2(w) = c2(u)c2(v),
//   a1(w) = a1(u)a1(v) - b2(u)b1(v),   a2(w) = a2(u)a2(v) - b1(u)b2(v),
//   b1(w) = a1(u*)b1(v) + b1(u)a1(v),  b2(w) = a2(u*)b2(v) + b2(u)a2(v).
SixVertexMatrix solve_w(const SixVertexMatrix& u, const SixVertexMatrix& v);
// DegenerateInput if an a-weight vanishes; NotComposable if wcond fails.

// Independent oracle: assembles the vanishing of [[u, w, v]] as a linear
// system in the six unknown weights of w (14 nontrivial bilinear equations,
// one duplicated) and returns its exact nullspace as a tri-state.
struct BruteForceResult {
  enum class Kind { Ray, Absent, MultiDimensional };

  Kind kind;
  int nullity;
  // Normalized representative (c1 = c1(u)c1(v), c2 = c2(u)c2(v)); present
  // only when kind == Ray.
  std::optional<SixVertexMatrix> ray;

  bool is_ray() const { return kind == Kind::Ray; }
  bool is_absent() const { return kind == Kind::Absent; }
  bool is_multi() const { return kind == Kind::MultiDimensional; }
};

BruteForceResult brute_force_w(const SixVertexMatrix& u, const SixVertexMatrix& v);

// Count of equations (nonzero rows) the commutator imposes; exposed for tests.
int brute_force_equation_count(const SixVertexMatrix& u, const SixVertexMatrix& v);

}  // namespace ybg
