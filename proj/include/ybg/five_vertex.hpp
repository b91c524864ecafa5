#pragma once

#include "ybg/six_vertex.hpp"

namespace ybg {

// Blown-up five-vertex groupoid element: a matrix with b2 = 0 in
// Phi-bar = Phi u Phi_b together with a label eps in C^x subject to
// N(v) = a1 b1 eps (both sides vanish on Phi_b, where b1 = 0).
struct FvElement {
  SixVertexMatrix matrix;
  Scalar eps;

  friend bool operator==(const FvElement&, const FvElement&) = default;
};

bool in_phi(const SixVertexMatrix& v);    // a1,a2,b1,c1,c2,N != 0, b2 = 0
bool in_phi_b(const SixVertexMatrix& v);  // a1,a2,c1,c2 != 0, b1 = b2 = 0, N = 0

FvElement fv_element(SixVertexMatrix m, Scalar eps);  // InvalidElement / ZeroLabel

FvElement fv_lift(const SixVertexMatrix& v);  // NotInPhi; label N/(a1 b1)

FvElement fv_boundary(const SixVertexMatrix& v, Scalar eps);  // NotInPhiB / ZeroLabel

// a1* = c1c2/a1, a2* = c1c2/a2, c's swapped, b1 negated; label (a1/a2) eps
// (equals N/(a2 b1) on Phi).
FvElement fv_star(const FvElement& e);

FvElement fv_inverse(const FvElement& e);  // star matrix / (c1 c2), star label

Scalar fv_delta(const FvElement& e);       // eps
Scalar fv_delta_star(const FvElement& e);  // (a1/a2) eps

bool fv_composable(const FvElement& u, const FvElement& v);

// c, a multiplicative; b1(w) = b1(u) a1(v) + (c1c2/a1)(u) b1(v); label eps(v).
FvElement fv_compose(const FvElement& u, const FvElement& v);  // ObjectMismatch

std::string to_string(const FvElement& e);

}  // namespace ybg
