#include <doctest.h>

#include "fixtures.hpp"
#include "ybg/groupoid_nf.hpp"
#include "ybg/solver.hpp"

using namespace ybg;

namespace {
NfElement lift_r() { return lift(fx::r()); }
}  // namespace

TEST_CASE("lift picks the unique fiber point over Omega") {
  NfElement r = lift_r();
  CHECK(r.d1 == scalar(3, 2));
  CHECK(r.d2 == Scalar(3));

  NfElement ub = lift(fx::u_cap_b());
  CHECK(ub.d1 == Scalar(3));
  CHECK(ub.d2 == scalar(2, 3));

  CHECK_THROWS_AS(lift(fx::id()), Error);   // N = 0: boundary
  CHECK_THROWS_AS(lift(fx::g_a()), Error);
}

TEST_CASE("boundary_element admits the full torus") {
  CHECK_NOTHROW(boundary_element(fx::g_b(), 5, 7));
  CHECK_NOTHROW(boundary_element(fx::g_a(), 1, 2));
  CHECK_THROWS_AS(boundary_element(fx::r(), 1, 1), Error);   // NotBoundary
  CHECK_THROWS_AS(boundary_element(fx::g_b(), 0, 1), Error); // ZeroLabel
}

TEST_CASE("nf_element validates the fiber invariant") {
  CHECK_NOTHROW(nf_element(fx::r(), scalar(3, 2), 3));
  CHECK_THROWS_AS(nf_element(fx::r(), 1, 1), Error);  // wrong labels over Omega
  CHECK_THROWS_AS(nf_element(fx::f(), 1, 1), Error);  // outside Omega-bar
}

TEST_CASE("nf_star worked values and region transport") {
  CHECK(nf_star(lift_r()) == nf_element(six_vertex(-1, -1, -4, -2, 1, 3), scalar(3, 2), 3));

  NfElement s = nf_star(boundary_element(fx::g_a(), 1, 2));
  CHECK(s == nf_element(fx::u_cap_b(), 3, scalar(2, 3)));
  CHECK(classify(s.matrix).tag == RegionTag::OmegaCapB);
  CHECK(nf_star(s) == boundary_element(fx::g_a(), 1, 2));

  NfElement sb = nf_star(boundary_element(fx::g_b(), 5, 7));
  CHECK(sb == boundary_element(six_vertex(3, 2, 0, 0, 1, 6), scalar(10, 3), scalar(21, 2)));
}

TEST_CASE("nf_inverse") {
  ObjectLabel d = object_label(5, 7);
  NfElement idm = idempotent(d);
  CHECK(nf_inverse(idm) == idm);
  CHECK(nf_star(idm) == idm);

  NfElement ri = nf_inverse(lift_r());
  CHECK(ri.matrix == scale(six_vertex(-1, -1, -4, -2, 1, 3), scalar(1, 3)));
  CHECK(ri.d1 == scalar(3, 2));
  CHECK(ri.d2 == Scalar(3));

  Rng rng(21);
  for (int k = 0; k < 50; ++k) {
    ObjectLabel dk = object_label(rng.nonzero_scalar(), rng.nonzero_scalar());
    NfElement e = sample_fiber(dk, FiberSide::Source, rng);
    CHECK(nf_inverse(nf_inverse(e)) == e);
    CHECK(nf_star(nf_star(e)) == e);
    CHECK(delta0(nf_star(e)) == delta0(e));
  }
}

TEST_CASE("delta maps") {
  CHECK(nf_delta(lift_r()) == object_label(scalar(3, 2), 3));
  CHECK(nf_delta_star(lift_r()) == object_label(scalar(3, 2), 3));
  CHECK(nf_delta_star(boundary_element(fx::g_a(), 1, 2)) == object_label(3, scalar(2, 3)));
  CHECK(nf_delta_star(boundary_element(fx::g_b(), 5, 7)) ==
        object_label(scalar(10, 3), scalar(21, 2)));
  CHECK(delta0(lift_r()) == scalar(9, 2));
}

TEST_CASE("composability") {
  CHECK(composable(lift_r(), lift_r()));
  CHECK_FALSE(composable(lift_r(), lift(fx::u_cap_b())));
  NfElement ga = boundary_element(fx::g_a(), 1, 2);
  NfElement va = boundary_element(fx::v_a(), 12, scalar(1, 6));
  CHECK(composable(ga, va));
}

TEST_CASE("compose worked values") {
  NfElement w = compose(lift_r(), lift_r());
  CHECK(w == lift(six_vertex(17, 17, 16, 8, 9, 1)));
  CHECK(w.d1 == scalar(3, 2));
  CHECK(w.d2 == Scalar(3));
  CHECK(n_value(w.matrix) == Scalar(408));
  CHECK(Scalar(408) == w.matrix.a1 * w.matrix.b1 * w.d1);
  CHECK(Scalar(408) == w.matrix.a2 * w.matrix.b2 * w.d2);

  NfElement wb = compose(boundary_element(fx::g_b(), 5, 7), lift(fx::v0()));
  CHECK(wb == lift(six_vertex(2, 3, 3, scalar(10, 7), 6, scalar(-23, 7))));
  CHECK(nf_delta(wb) == object_label(5, 7));

  // doubly degenerate composition through the extended star
  NfElement ga = boundary_element(fx::g_a(), 1, 2);
  NfElement va = boundary_element(fx::v_a(), 12, scalar(1, 6));
  NfElement wa = compose(ga, va);
  CHECK(wa == nf_element(six_vertex(-3, -12, -2, -36, 12, 3), 12, scalar(1, 6)));
  CHECK(yb_commutator(ga.matrix, wa.matrix, va.matrix).is_zero());
  CHECK(n_value(wa.matrix) == Scalar(72));

  CHECK_THROWS_AS(compose(lift_r(), lift(fx::u_cap_b())), Error);  // ObjectMismatch
}

TEST_CASE("idempotents act as identities") {
  ObjectLabel d = object_label(5, 7);
  NfElement idm = idempotent(d);
  CHECK(idm.matrix == fx::id());
  CHECK(compose(idm, idm) == idm);
  CHECK(nf_delta(idm) == d);
  CHECK_THROWS_AS(idempotent(ObjectLabel{0, 1}), Error);

  Rng rng(33);
  for (int k = 0; k < 30; ++k) {
    ObjectLabel dk = object_label(rng.nonzero_scalar(), rng.nonzero_scalar());
    NfElement e = sample_fiber(dk, FiberSide::Source, rng);
    CHECK(compose(e, idempotent(nf_delta(e))) == e);
    CHECK(compose(idempotent(nf_delta_star(e)), e) == e);
    CHECK(compose(e, nf_inverse(e)) == idempotent(nf_delta_star(e)));
    CHECK(compose(nf_inverse(e), e) == idempotent(nf_delta(e)));
  }
}

TEST_CASE("fiber construction reproduces the worked draws") {
  NfElement r = fiber_element(object_label(scalar(3, 2), 3), FiberSide::Source, 5, 5, 4, 3);
  CHECK(r == lift_r());

  NfElement v = fiber_element(object_label(5, 7), FiberSide::Target, 1, 1, 1, 1);
  CHECK(v.matrix == fx::v0());
  CHECK(nf_delta_star(v) == object_label(5, 7));
}

TEST_CASE("sample_fiber pins the requested side and is deterministic") {
  Rng rng(2024);
  for (int k = 0; k < 50; ++k) {
    ObjectLabel d = object_label(rng.nonzero_scalar(), rng.nonzero_scalar());
    NfElement src = sample_fiber(d, FiberSide::Source, rng);
    CHECK(nf_delta(src) == d);
    NfElement tgt = sample_fiber(d, FiberSide::Target, rng);
    CHECK(nf_delta_star(tgt) == d);
  }
  CHECK(sample_fiber(object_label(2, 3), FiberSide::Source, std::uint64_t{11}) ==
        sample_fiber(object_label(2, 3), FiberSide::Source, std::uint64_t{11}));
}

TEST_CASE("the two b-weight expressions agree on every stratum") {
  // b1(w) = a1(u*) b1(v) + b1(u) a1(v) = b1(u) a2(v*) + a2(u) b1(v), with the
  // extended-star a-components; dually for b2(w).
  auto check_alt = [](const NfElement& u, const NfElement& v) {
    NfElement w = compose(u, v);
    SixVertexMatrix vs = nf_star(v).matrix;
    CHECK(w.matrix.b1 == u.matrix.b1 * vs.a2 + u.matrix.a2 * v.matrix.b1);
    CHECK(w.matrix.b2 == u.matrix.b2 * vs.a1 + u.matrix.a1 * v.matrix.b2);
  };
  check_alt(lift_r(), lift_r());
  check_alt(boundary_element(fx::g_b(), 5, 7), lift(fx::v0()));
  check_alt(boundary_element(fx::g_a(), 1, 2), boundary_element(fx::v_a(), 12, scalar(1, 6)));
  Rng rng(55);
  for (int k = 0; k < 40; ++k) {
    ObjectLabel d = object_label(rng.nonzero_scalar(), rng.nonzero_scalar());
    check_alt(sample_fiber(d, FiberSide::Source, rng), sample_fiber(d, FiberSide::Target, rng));
  }
}

TEST_CASE("associativity including a doubly degenerate factor") {
  // u, v in Gamma_a with matching labels, t sampled to continue the chain
  NfElement va = boundary_element(fx::v_a(), 12, scalar(1, 6));
  NfElement ga = boundary_element(fx::g_a(), 1, 2);
  Rng rng(17);
  NfElement t = sample_fiber(nf_delta(va), FiberSide::Target, rng);
  NfElement s1 = compose(ga, va);
  NfElement s2 = compose(va, t);
  CHECK(compose(s1, t) == compose(ga, s2));
  // anti-homomorphism across the boundary composition
  CHECK(nf_inverse(s1) == compose(nf_inverse(va), nf_inverse(ga)));
}
