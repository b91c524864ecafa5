#include "ybg/groupoid_nf.hpp"

namespace ybg {

NfElement nf_element(SixVertexMatrix m, Scalar d1, Scalar d2) {
  if (d1.is_zero() || d2.is_zero()) fail(Errc::ZeroLabel, "labels live in (C^x)^2");
  if (classify(m).tag == RegionTag::Outside)
    fail(Errc::InvalidElement, "matrix outside Omega-bar: " + to_string(m));
  Scalar n = n_value(m);
  if (m.a1 * m.b1 * d1 != n || m.a2 * m.b2 * d2 != n)
    fail(Errc::InvalidElement,
         "labels violate a1 b1 d1 = N = a2 b2 d2 for " + to_string(m));
  return {std::move(m), std::move(d1), std::move(d2)};
}

NfElement lift(const SixVertexMatrix& u) {
  RegionTag tag = classify(u).tag;
  if (tag != RegionTag::OmegaCirc && tag != RegionTag::OmegaCapB)
    fail(Errc::NotInOmega, "lift needs u in Omega: " + to_string(u));
  auto [del, del_star] = delta_pair(u);
  (void)del_star;
  return {u, del.d1, del.d2};
}

NfElement boundary_element(const SixVertexMatrix& u, Scalar d1, Scalar d2) {
  RegionTag tag = classify(u).tag;
  if (tag != RegionTag::OmegaLowB && tag != RegionTag::OmegaLowA)
    fail(Errc::NotBoundary, "not an Omega_b or Omega_a matrix: " + to_string(u));
  if (d1.is_zero() || d2.is_zero()) fail(Errc::ZeroLabel, "labels live in (C^x)^2");
  return {u, std::move(d1), std::move(d2)};
}

NfElement nf_star(const NfElement& e) {
  const SixVertexMatrix& m = e.matrix;
  bool gamma_a = classify(m).tag == RegionTag::OmegaLowA;
  Scalar sa1, sa2, sd1, sd2;
  if (gamma_a) {
    sa1 = -e.d1 * m.b1;
    sa2 = -e.d2 * m.b2;
    sd1 = (m.b2 / m.b1) * e.d2;
    sd2 = (m.b1 / m.b2) * e.d1;
  } else {
    Scalar d = det_mid(m);
    sa1 = d / m.a1;
    sa2 = d / m.a2;
    sd1 = (m.a1 / m.a2) * e.d1;
    sd2 = (m.a2 / m.a1) * e.d2;
  }
  return {{sa1, sa2, -m.b1, -m.b2, m.c2, m.c1}, sd1, sd2};
}

NfElement nf_inverse(const NfElement& e) {
  NfElement s = nf_star(e);
  Scalar cc = e.matrix.c1 * e.matrix.c2;
  return {scale(s.matrix, inverse(cc)), s.d1, s.d2};
}

ObjectLabel nf_delta(const NfElement& e) { return {e.d1, e.d2}; }

ObjectLabel nf_delta_star(const NfElement& e) {
  NfElement s = nf_star(e);
  return {s.d1, s.d2};
}

Scalar delta0(const NfElement& e) { return e.d1 * e.d2; }

bool composable(const NfElement& u, const NfElement& v) {
  return nf_delta(u) == nf_delta_star(v);
}

NfElement compose(const NfElement& u, const NfElement& v) {
  if (!composable(u, v))
    fail(Errc::ObjectMismatch, "Delta(u) = " + to_string(nf_delta(u)) +
                                   " but Delta(v*) = " + to_string(nf_delta_star(v)));
  const SixVertexMatrix& a = u.matrix;
  const SixVertexMatrix& b = v.matrix;
  SixVertexMatrix us = nf_star(u).matrix;  // extended star: valid on every stratum
  SixVertexMatrix w{a.a1 * b.a1 - a.b2 * b.b1, a.a2 * b.a2 - a.b1 * b.b2,
                    us.a1 * b.b1 + a.b1 * b.a1, us.a2 * b.b2 + a.b2 * b.a2,
                    a.c1 * b.c1, a.c2 * b.c2};
  // Label transport Delta(w) = Delta(v); nf_element re-checks the fiber
  // invariant, so a composition that left Omega-bar would be caught here.
  return nf_element(std::move(w), v.d1, v.d2);
}

NfElement idempotent(const ObjectLabel& d) {
  return boundary_element(identity_vertex(), d.d1, d.d2);
}

NfElement fiber_element(const ObjectLabel& d, FiberSide side, const Scalar& a1,
                        const Scalar& a2, const Scalar& b1, const Scalar& c1) {
  if (a1.is_zero() || a2.is_zero() || b1.is_zero() || c1.is_zero())
    fail(Errc::DegenerateInput, "fiber draws must be nonzero");
  Scalar n = side == FiberSide::Source ? d.d1 * a1 * b1 : d.d1 * a2 * b1;
  Scalar b2 = side == FiberSide::Source ? n / (d.d2 * a2) : n / (d.d2 * a1);
  Scalar c2 = (a1 * a2 + b1 * b2 - n) / c1;
  if (c2.is_zero()) fail(Errc::DegenerateInput, "draw lands on c2 = 0");
  return lift(six_vertex(a1, a2, b1, b2, c1, c2));
}

NfElement sample_fiber(const ObjectLabel& d, FiberSide side, Rng& rng, int max_retries) {
  if (d.d1.is_zero() || d.d2.is_zero()) fail(Errc::ZeroLabel, "labels live in (C^x)^2");
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Scalar a1 = rng.nonzero_scalar(), a2 = rng.nonzero_scalar();
    Scalar b1 = rng.nonzero_scalar(), c1 = rng.nonzero_scalar();
    try {
      return fiber_element(d, side, a1, a2, b1, c1);
    } catch (const Error& e) {
      if (e.code() != Errc::DegenerateInput) throw;
    }
  }
  fail(Errc::ExhaustedRetries, "no admissible fiber point found");
}

NfElement sample_fiber(const ObjectLabel& d, FiberSide side, std::uint64_t seed,
                       int max_retries) {
  Rng rng(seed);
  return sample_fiber(d, side, rng, max_retries);
}

std::string to_string(const NfElement& e) {
  return to_string(e.matrix) + " @ (" + to_string(e.d1) + ", " + to_string(e.d2) + ")";
}

}  // namespace ybg
