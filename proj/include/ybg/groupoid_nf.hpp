#pragma once

#include <cstdint>

#include "ybg/rng.hpp"
#include "ybg/six_vertex.hpp"

namespace ybg {

// Element of the blown-up non-free-fermionic groupoid: a matrix in
// Omega-bar together with labels (d1, d2) in (C^x)^2 subject to
//   a1 b1 d1 = N(matrix) = a2 b2 d2.
// Over Omega (N != 0) the labels are forced to (Delta1, Delta2); over the
// Omega_b and Omega_a strata both sides vanish and the fiber is a full torus.
struct NfElement {
  SixVertexMatrix matrix;
  Scalar d1, d2;

  friend bool operator==(const NfElement&, const NfElement&) = default;
};

// Validating constructor used by deserialization and by compose's
// postcondition check.
NfElement nf_element(SixVertexMatrix m, Scalar d1, Scalar d2);  // InvalidElement / ZeroLabel

// The unique fiber point over u in Omega = Omega_circ u Omega_B.
NfElement lift(const SixVertexMatrix& u);  // NotInOmega

// Fiber point over the blown-up strata; any nonzero (d1, d2) is admissible.
NfElement boundary_element(const SixVertexMatrix& u, Scalar d1, Scalar d2);
// NotBoundary / ZeroLabel

// Star extended continuously to the whole groupoid: fixes Omega_circ and
// Gamma_b, exchanges Gamma_a with Omega_B.
NfElement nf_star(const NfElement& e);

// Groupoid inverse e' = star(e) with the matrix scaled by 1/(c1 c2).
NfElement nf_inverse(const NfElement& e);

ObjectLabel nf_delta(const NfElement& e);
ObjectLabel nf_delta_star(const NfElement& e);

// Block invariant d1 d2; constant along stars, inverses and compositions.
Scalar delta0(const NfElement& e);

bool composable(const NfElement& u, const NfElement& v);

// u * v with the uniform normalized-solution weight formulas (the extended
// star supplies the a*-components on every stratum) and labels Delta(v).
NfElement compose(const NfElement& u, const NfElement& v);  // ObjectMismatch

NfElement idempotent(const ObjectLabel& d);  // ZeroLabel

enum class FiberSide { Source, Target };

// Deterministic fiber point from explicit draws (a1, a2, b1, c1):
//   source: N := d1 a1 b1, b2 := N/(d2 a2), c2 := (a1 a2 + b1 b2 - N)/c1,
//           giving Delta = d;
//   target: N := d1 a2 b1, b2 := N/(d2 a1), same c2 formula, giving
//           Delta(star) = d.
// DegenerateInput when a draw makes a required weight vanish (c2 = 0).
NfElement fiber_element(const ObjectLabel& d, FiberSide side, const Scalar& a1,
                        const Scalar& a2, const Scalar& b1, const Scalar& c1);

// Seeded sampler over the fiber; retries fiber_element on degenerate draws.
NfElement sample_fiber(const ObjectLabel& d, FiberSide side, Rng& rng,
                       int max_retries = 64);  // ExhaustedRetries
NfElement sample_fiber(const ObjectLabel& d, FiberSide side, std::uint64_t seed,
                       int max_retries = 64);

std::string to_string(const NfElement& e);

}  // namespace ybg
