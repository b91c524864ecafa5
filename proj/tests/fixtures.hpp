#pragma once

// Worked six-vertex matrices used across the test suites. The r/f pair are
// the weight-family instances R_cf(2,1,3,1,1) and R_ff(2,1,3,1,1); the rest
// mark the boundary strata.

#include "ybg/six_vertex.hpp"

namespace fx {

inline ybg::SixVertexMatrix r() { return ybg::six_vertex(5, 5, 4, 2, 3, 1); }
inline ybg::SixVertexMatrix f() { return ybg::six_vertex(5, -1, 4, 2, 3, 1); }
inline ybg::SixVertexMatrix id() { return ybg::identity_vertex(); }
inline ybg::SixVertexMatrix u_cap_b() { return ybg::six_vertex(-2, -6, -2, -3, 1, 6); }
inline ybg::SixVertexMatrix g_b() { return ybg::six_vertex(2, 3, 0, 0, 6, 1); }
inline ybg::SixVertexMatrix g_a() { return ybg::six_vertex(0, 0, 2, 3, 6, 1); }
inline ybg::SixVertexMatrix v_a() { return ybg::six_vertex(0, 0, 1, 6, 2, 3); }

inline ybg::SixVertexMatrix v0() {
  using ybg::scalar;
  return ybg::six_vertex(1, 1, 1, scalar(5, 7), 1, scalar(-23, 7));
}

inline ybg::SixVertexMatrix u5() { return ybg::six_vertex(2, 3, 1, 0, 1, 2); }
inline ybg::SixVertexMatrix v5() { return ybg::six_vertex(1, 1, 1, 0, 1, -1); }

}  // namespace fx
