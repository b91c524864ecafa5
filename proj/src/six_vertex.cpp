#include "ybg/six_vertex.hpp"

namespace ybg {

SixVertexMatrix six_vertex(Scalar a1, Scalar a2, Scalar b1, Scalar b2, Scalar c1, Scalar c2) {
  if (c1.is_zero() || c2.is_zero())
    fail(Errc::CZero, "six-vertex matrix requires c1, c2 != 0");
  return {std::move(a1), std::move(a2), std::move(b1),
          std::move(b2), std::move(c1), std::move(c2)};
}

SixVertexMatrix identity_vertex() { return {1, 1, 0, 0, 1, 1}; }

Scalar n_value(const SixVertexMatrix& u) {
  return u.a1 * u.a2 + u.b1 * u.b2 - u.c1 * u.c2;
}

Scalar det_mid(const SixVertexMatrix& u) { return u.c1 * u.c2 - u.b1 * u.b2; }

SixVertexMatrix scale(const SixVertexMatrix& u, const Scalar& lambda) {
  return {lambda * u.a1, lambda * u.a2, lambda * u.b1,
          lambda * u.b2, lambda * u.c1, lambda * u.c2};
}

const char* region_tag_name(RegionTag t) {
  switch (t) {
    case RegionTag::OmegaCirc: return "Omega_circ";
    case RegionTag::OmegaCapB: return "Omega_B";
    case RegionTag::OmegaLowB: return "Omega_b";
    case RegionTag::OmegaLowA: return "Omega_a";
    case RegionTag::Outside: return "OutsideOmegaBar";
  }
  return "?";
}

Region classify(const SixVertexMatrix& u) {
  Region r{};
  r.a1_nonzero = !u.a1.is_zero();
  r.a2_nonzero = !u.a2.is_zero();
  r.b1_nonzero = !u.b1.is_zero();
  r.b2_nonzero = !u.b2.is_zero();
  r.det_mid_nonzero = !det_mid(u).is_zero();
  r.n_nonzero = !n_value(u).is_zero();
  r.aa_equals_cc = (u.a1 * u.a2 - u.c1 * u.c2).is_zero();
  r.bb_equals_cc = (u.b1 * u.b2 - u.c1 * u.c2).is_zero();

  bool a_nz = r.a1_nonzero && r.a2_nonzero;
  bool b_nz = r.b1_nonzero && r.b2_nonzero;
  r.in_s_times = a_nz && r.det_mid_nonzero;
  r.in_s_bullet = a_nz && b_nz;
  r.in_s_circ = r.in_s_times && r.in_s_bullet;
  r.in_omega = a_nz && b_nz && r.n_nonzero;
  r.free_fermionic = !r.n_nonzero;

  if (r.in_omega)
    r.tag = r.det_mid_nonzero ? RegionTag::OmegaCirc : RegionTag::OmegaCapB;
  else if (a_nz && !r.b1_nonzero && !r.b2_nonzero && r.aa_equals_cc)
    r.tag = RegionTag::OmegaLowB;
  else if (b_nz && !r.a1_nonzero && !r.a2_nonzero && r.bb_equals_cc)
    r.tag = RegionTag::OmegaLowA;
  else
    r.tag = RegionTag::Outside;
  return r;
}

SixVertexMatrix star(const SixVertexMatrix& u) {
  if (u.a1.is_zero() || u.a2.is_zero())
    fail(Errc::DegenerateInput, "star needs a1, a2 != 0");
  Scalar d = det_mid(u);
  return {d / u.a1, d / u.a2, -u.b1, -u.b2, u.c2, u.c1};
}

ObjectLabel object_label(Scalar d1, Scalar d2) {
  if (d1.is_zero() || d2.is_zero())
    fail(Errc::ZeroLabel, "object labels live in (C^x)^2");
  return {std::move(d1), std::move(d2)};
}

std::string to_string(const ObjectLabel& d) {
  return "(" + to_string(d.d1) + ", " + to_string(d.d2) + ")";
}

std::pair<ObjectLabel, ObjectLabel> delta_pair(const SixVertexMatrix& u) {
  if (u.a1.is_zero() || u.a2.is_zero() || u.b1.is_zero() || u.b2.is_zero())
    fail(Errc::DegenerateInput, "delta needs u in S-bullet");
  Scalar n = n_value(u);
  if (n.is_zero()) fail(Errc::ZeroN, "free-fermionic matrix: Delta leaves (C^x)^2");
  ObjectLabel del{n / (u.a1 * u.b1), n / (u.a2 * u.b2)};
  ObjectLabel del_star{n / (u.a2 * u.b1), n / (u.a1 * u.b2)};
  return {del, del_star};
}

std::string to_string(const SixVertexMatrix& u) {
  return "(" + to_string(u.a1) + ", " + to_string(u.a2) + ", " + to_string(u.b1) +
         ", " + to_string(u.b2) + ", " + to_string(u.c1) + ", " + to_string(u.c2) + ")";
}

}  // namespace ybg
