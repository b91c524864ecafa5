#pragma once

#include <string>
#include <utility>

#include "ybg/scalar.hpp"

namespace ybg {

// The six Boltzmann weights of the 4x4 matrix
//
//   [ a1          ]
//   [    c1  b1   ]      basis e1(x)e1, e1(x)e2, e2(x)e1, e2(x)e2
//   [    b2  c2   ]
//   [          a2 ]
//
// Membership in S requires c1, c2 != 0; six_vertex() enforces it.
struct SixVertexMatrix {
  Scalar a1, a2, b1, b2, c1, c2;

  friend bool operator==(const SixVertexMatrix&, const SixVertexMatrix&) = default;
};

SixVertexMatrix six_vertex(Scalar a1, Scalar a2, Scalar b1, Scalar b2, Scalar c1, Scalar c2);

SixVertexMatrix identity_vertex();  // (1,1,0,0,1,1)

// N(u) = a1 a2 + b1 b2 - c1 c2. Vanishes exactly on the free-fermionic locus.
Scalar n_value(const SixVertexMatrix& u);

// det of the middle block: c1 c2 - b1 b2.
Scalar det_mid(const SixVertexMatrix& u);

SixVertexMatrix scale(const SixVertexMatrix& u, const Scalar& lambda);

// Primary classification within the closure Omega-bar; elements outside it
// (including all genuinely free-fermionic interior points) get Outside.
enum class RegionTag { OmegaCirc, OmegaCapB, OmegaLowB, OmegaLowA, Outside };

const char* region_tag_name(RegionTag t);  // "Omega_circ", "Omega_B", "Omega_b", "Omega_a", "OutsideOmegaBar"

struct Region {
  // predicate vector
  bool a1_nonzero, a2_nonzero, b1_nonzero, b2_nonzero;
  bool det_mid_nonzero, n_nonzero;
  bool aa_equals_cc;  // a1 a2 - c1 c2 = 0
  bool bb_equals_cc;  // b1 b2 - c1 c2 = 0
  // derived set memberships (S itself always holds for a constructed matrix)
  bool in_s_times, in_s_bullet, in_s_circ, in_omega;
  bool free_fermionic;  // N(u) = 0; orthogonal to the region tag
  RegionTag tag;
};

Region classify(const SixVertexMatrix& u);

// u* with a1(u*) = detB/a1, a2(u*) = detB/a2, the c's swapped and the b's
// negated. Defined only when a1, a2 != 0; the groupoid-level extension to
// the a = 0 boundary lives in groupoid_nf.
SixVertexMatrix star(const SixVertexMatrix& u);

struct ObjectLabel {
  Scalar d1, d2;

  friend bool operator==(const ObjectLabel&, const ObjectLabel&) = default;
};

ObjectLabel object_label(Scalar d1, Scalar d2);  // ZeroLabel if either vanishes

std::string to_string(const ObjectLabel& d);

// (Delta(u), Delta(u*)) = ((N/a1b1, N/a2b2), (N/a2b1, N/a1b2)).
// DegenerateInput if any of a1,a2,b1,b2 vanish; ZeroN on the free-fermionic
// locus where the labels leave (C^x)^2.
std::pair<ObjectLabel, ObjectLabel> delta_pair(const SixVertexMatrix& u);

std::string to_string(const SixVertexMatrix& u);

}  // namespace ybg
