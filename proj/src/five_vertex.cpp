#include "ybg/five_vertex.hpp"

namespace ybg {

bool in_phi(const SixVertexMatrix& v) {
  return v.b2.is_zero() && !v.a1.is_zero() && !v.a2.is_zero() && !v.b1.is_zero() &&
         !n_value(v).is_zero();
}

bool in_phi_b(const SixVertexMatrix& v) {
  return v.b1.is_zero() && v.b2.is_zero() && !v.a1.is_zero() && !v.a2.is_zero() &&
         n_value(v).is_zero();
}

FvElement fv_element(SixVertexMatrix m, Scalar eps) {
  if (eps.is_zero()) fail(Errc::ZeroLabel, "eps lives in C^x");
  if (!in_phi(m) && !in_phi_b(m))
    fail(Errc::InvalidElement, "matrix outside Phi-bar: " + to_string(m));
  if (n_value(m) != m.a1 * m.b1 * eps)
    fail(Errc::InvalidElement, "label violates N = a1 b1 eps for " + to_string(m));
  return {std::move(m), std::move(eps)};
}

FvElement fv_lift(const SixVertexMatrix& v) {
  if (!in_phi(v)) fail(Errc::NotInPhi, "lift needs v in Phi: " + to_string(v));
  return {v, n_value(v) / (v.a1 * v.b1)};
}

FvElement fv_boundary(const SixVertexMatrix& v, Scalar eps) {
  if (!in_phi_b(v)) fail(Errc::NotInPhiB, "not a Phi_b matrix: " + to_string(v));
  if (eps.is_zero()) fail(Errc::ZeroLabel, "eps lives in C^x");
  return {v, std::move(eps)};
}

FvElement fv_star(const FvElement& e) {
  const SixVertexMatrix& m = e.matrix;
  Scalar cc = m.c1 * m.c2;
  return {{cc / m.a1, cc / m.a2, -m.b1, 0, m.c2, m.c1}, (m.a1 / m.a2) * e.eps};
}

FvElement fv_inverse(const FvElement& e) {
  FvElement s = fv_star(e);
  return {scale(s.matrix, inverse(e.matrix.c1 * e.matrix.c2)), s.eps};
}

Scalar fv_delta(const FvElement& e) { return e.eps; }

Scalar fv_delta_star(const FvElement& e) {
  return (e.matrix.a1 / e.matrix.a2) * e.eps;
}

bool fv_composable(const FvElement& u, const FvElement& v) {
  return fv_delta(u) == fv_delta_star(v);
}

FvElement fv_compose(const FvElement& u, const FvElement& v) {
  if (!fv_composable(u, v))
    fail(Errc::ObjectMismatch, "Delta1(u) = " + to_string(u.eps) +
                                   " but Delta1(v*) = " + to_string(fv_delta_star(v)));
  const SixVertexMatrix& a = u.matrix;
  const SixVertexMatrix& b = v.matrix;
  Scalar a1_star = a.c1 * a.c2 / a.a1;
  SixVertexMatrix w{a.a1 * b.a1, a.a2 * b.a2, a.b1 * b.a1 + a1_star * b.b1, 0,
                    a.c1 * b.c1, a.c2 * b.c2};
  return fv_element(std::move(w), v.eps);
}

std::string to_string(const FvElement& e) {
  return to_string(e.matrix) + " @ " + to_string(e.eps);
}

}  // namespace ybg
