#pragma once

#include "ybg/six_vertex.hpp"

namespace ybg {

// Free-fermionic parameter group GL(2) x GL(1). The 2x2 part carries the
// weights as ( a1  -b2 ; b1  a2 ); under that labelling the group product is
// the plain matrix product and embeds onto the N = 0 six-vertex matrices.
struct FfElement {
  Scalar g11, g12, g21, g22;  // (a1, -b2; b1, a2)
  Scalar c1;

  Scalar det() const { return g11 * g22 - g12 * g21; }

  friend bool operator==(const FfElement&, const FfElement&) = default;
};

FfElement ff_element(Scalar g11, Scalar g12, Scalar g21, Scalar g22, Scalar c1);
// DegenerateInput if det = 0; ZeroLabel if c1 = 0.

FfElement ff_identity();

// Six-vertex matrix with c2 = (a1 a2 + b1 b2)/c1; the output satisfies
// N = 0 exactly. DerivedCZero if a1 a2 + b1 b2 = 0 (never for a valid
// FfElement, where that sum is det g).
SixVertexMatrix ff_embed(const FfElement& g);

FfElement ff_from_matrix(const SixVertexMatrix& u);  // NotFreeFermionic if N(u) != 0

FfElement ff_compose(const FfElement& a, const FfElement& b);

FfElement ff_inverse(const FfElement& a);

// The two named weight families. Both need q1 != q2 and nonzero z1, z2, w
// (otherwise a c-weight vanishes and the output leaves S).
SixVertexMatrix weights_cf(const Scalar& q1, const Scalar& q2, const Scalar& z1,
                           const Scalar& z2, const Scalar& w);
// a2 differs: q1 z2 - q2 z1; every output satisfies N = 0.
SixVertexMatrix weights_ff(const Scalar& q1, const Scalar& q2, const Scalar& z1,
                           const Scalar& z2, const Scalar& w);

}  // namespace ybg
