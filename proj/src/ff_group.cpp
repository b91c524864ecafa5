#include "ybg/ff_group.hpp"

namespace ybg {

FfElement ff_element(Scalar g11, Scalar g12, Scalar g21, Scalar g22, Scalar c1) {
  FfElement g{std::move(g11), std::move(g12), std::move(g21), std::move(g22), std::move(c1)};
  if (g.det().is_zero()) fail(Errc::DegenerateInput, "ff element needs det(g) != 0");
  if (g.c1.is_zero()) fail(Errc::ZeroLabel, "ff element needs c1 != 0");
  return g;
}

FfElement ff_identity() { return {1, 0, 0, 1, 1}; }

SixVertexMatrix ff_embed(const FfElement& g) {
  Scalar a1 = g.g11, b2 = -g.g12, b1 = g.g21, a2 = g.g22;
  Scalar s = a1 * a2 + b1 * b2;
  if (s.is_zero()) fail(Errc::DerivedCZero, "a1 a2 + b1 b2 = 0: derived c2 leaves S");
  return six_vertex(a1, a2, b1, b2, g.c1, s / g.c1);
}

FfElement ff_from_matrix(const SixVertexMatrix& u) {
  if (!n_value(u).is_zero()) fail(Errc::NotFreeFermionic, "N(u) != 0");
  // a1 a2 + b1 b2 = c1 c2 != 0, so det(g) is automatically nonzero
  return ff_element(u.a1, -u.b2, u.b1, u.a2, u.c1);
}

FfElement ff_compose(const FfElement& a, const FfElement& b) {
  return ff_element(a.g11 * b.g11 + a.g12 * b.g21, a.g11 * b.g12 + a.g12 * b.g22,
                    a.g21 * b.g11 + a.g22 * b.g21, a.g21 * b.g12 + a.g22 * b.g22,
                    a.c1 * b.c1);
}

FfElement ff_inverse(const FfElement& a) {
  Scalar d = a.det();
  return ff_element(a.g22 / d, -a.g12 / d, -a.g21 / d, a.g11 / d, inverse(a.c1));
}

SixVertexMatrix weights_cf(const Scalar& q1, const Scalar& q2, const Scalar& z1,
                           const Scalar& z2, const Scalar& w) {
  if (q1 == q2) fail(Errc::CZero, "q1 = q2 collapses the c-weights");
  if (z1.is_zero() || z2.is_zero() || w.is_zero())
    fail(Errc::CZero, "z1, z2, w must be nonzero");
  Scalar q = q1 - q2;
  return six_vertex(q1 * z1 - q2 * z2, q1 * z1 - q2 * z2, q1 * (z1 - z2),
                    q2 * (z1 - z2), z1 * w * q, z2 * inverse(w) * q);
}

SixVertexMatrix weights_ff(const Scalar& q1, const Scalar& q2, const Scalar& z1,
                           const Scalar& z2, const Scalar& w) {
  if (q1 == q2) fail(Errc::CZero, "q1 = q2 collapses the c-weights");
  if (z1.is_zero() || z2.is_zero() || w.is_zero())
    fail(Errc::CZero, "z1, z2, w must be nonzero");
  Scalar q = q1 - q2;
  return six_vertex(q1 * z1 - q2 * z2, q1 * z2 - q2 * z1, q1 * (z1 - z2),
                    q2 * (z1 - z2), z1 * w * q, z2 * inverse(w) * q);
}

}  // namespace ybg
