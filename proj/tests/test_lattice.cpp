#include <doctest.h>

#include "fixtures.hpp"
#include "ybg/lattice.hpp"

using namespace ybg;

namespace {

LatticeModel seeded_nf_model(int rows, int cols, std::uint64_t seed) {
  Rng rng(seed);
  ObjectLabel d = object_label(rng.nonzero_scalar(), rng.nonzero_scalar());
  std::vector<GroupoidElement> phi, psi;
  for (int i = 0; i < rows; ++i) phi.emplace_back(sample_fiber(d, FiberSide::Source, rng));
  for (int j = 0; j < cols; ++j) psi.emplace_back(sample_fiber(d, FiberSide::Target, rng));
  return build_model(Label(d), phi, psi);
}

BoundaryAssignment random_bc(const LatticeModel& m, HorizontalMode mode, Rng& rng) {
  BoundaryAssignment bc;
  bc.mode = mode;
  for (int i = 0; i < m.rows; ++i) {
    bc.west.push_back(rng.bit());
    bc.east.push_back(rng.bit());
  }
  for (int j = 0; j < m.cols; ++j) {
    bc.south.push_back(rng.bit());
    bc.north.push_back(rng.bit());
  }
  return bc;
}

LatticeModel one_vertex_model(const SixVertexMatrix& u) {
  // a 1x1 grid carrying exactly the weights of u: gamma_11 = lift(u) when
  // u is in Omega; r works
  NfElement e = lift(u);
  NfElement idm = idempotent(nf_delta(e));
  // phi = e, psi = idempotent at Delta(e): gamma = e * idm = e
  return build_model(Label(nf_delta(e)), {GroupoidElement(e)}, {GroupoidElement(idm)});
}

}  // namespace

TEST_CASE("pi projects elements to their weight matrices") {
  CHECK(pi(GroupoidElement(lift(fx::r()))) == fx::r());
  CHECK(pi(GroupoidElement(ff_element(5, -2, 4, -1, 3))) == fx::f());
  CHECK(pi(GroupoidElement(fv_lift(fx::u5()))) == fx::u5());
  // pi is not injective on blown-up fibers
  CHECK(pi(GroupoidElement(boundary_element(fx::g_b(), 5, 7))) ==
        pi(GroupoidElement(boundary_element(fx::g_b(), 1, 1))));
}

TEST_CASE("generic groupoid dispatch") {
  GroupoidElement a{lift(fx::r())}, b{ff_element(5, -2, 4, -1, 3)};
  CHECK_THROWS_AS(compose(a, b), Error);  // TagMismatch
  // Omega_b and Phi_b elements share matrices but live in different groupoids
  GroupoidElement nf_id{idempotent(object_label(3, 3))}, fv_id{fv_boundary(fx::id(), 3)};
  CHECK_THROWS_AS(compose(nf_id, fv_id), Error);
  CHECK(composable(b, b));                // ff group: everything composes
  CHECK(compose(b, b) == GroupoidElement(ff_element(17, -8, 16, -7, 9)));
  CHECK(delta(b) == Label(UnitLabel{}));
  CHECK(delta(a) == Label(object_label(scalar(3, 2), 3)));
  CHECK(inverse(a) == GroupoidElement(nf_inverse(lift(fx::r()))));
}

TEST_CASE("build_model populates the grid and checks labels") {
  NfElement r = lift(fx::r());
  LatticeModel m = build_model(Label(nf_delta(r)), {GroupoidElement(r)}, {GroupoidElement(r)});
  CHECK(m.rows == 1);
  CHECK(m.cols == 1);
  CHECK(m.gamma[0][0] == GroupoidElement(lift(six_vertex(17, 17, 16, 8, 9, 1))));

  // mismatched d
  CHECK_THROWS_AS(build_model(Label(object_label(1, 1)), {GroupoidElement(r)},
                              {GroupoidElement(r)}),
                  Error);
  // mixed tags
  CHECK_THROWS_AS(build_model(Label(nf_delta(r)), {GroupoidElement(r)},
                              {GroupoidElement(ff_identity())}),
                  Error);
}

TEST_CASE("row_rho and col_rho") {
  LatticeModel one = one_vertex_model(fx::r());
  CHECK_THROWS_AS(row_rho(one, 1), Error);  // no adjacent pair in a 1-row model

  // two equal rows: rho is the idempotent at Delta(phi')
  Rng rng(64);
  ObjectLabel d = object_label(2, 5);
  NfElement p = sample_fiber(d, FiberSide::Source, rng);
  NfElement q1 = sample_fiber(d, FiberSide::Target, rng);
  NfElement q2 = sample_fiber(d, FiberSide::Target, rng);
  LatticeModel m = build_model(Label(d), {GroupoidElement(p), GroupoidElement(p)},
                               {GroupoidElement(q1), GroupoidElement(q2)});
  CHECK(row_rho(m, 1) == GroupoidElement(idempotent(nf_delta_star(p))));

  LatticeModel big = seeded_nf_model(3, 4, 123);
  for (int i = 1; i < big.rows; ++i) {
    GroupoidElement rho = row_rho(big, i);
    for (int j = 0; j < big.cols; ++j)
      CHECK(compose(big.gamma[i - 1][j], inverse(big.gamma[i][j])) == rho);
    CHECK(rho == compose(big.phi[i - 1], inverse(big.phi[i])));
  }
  for (int j = 1; j < big.cols; ++j) {
    GroupoidElement c = col_rho(big, j);
    for (int i = 0; i < big.rows; ++i)
      CHECK(compose(inverse(big.gamma[i][j - 1]), big.gamma[i][j]) == c);
  }
}

TEST_CASE("check_solvability passes on built models and locates damage") {
  LatticeModel m = seeded_nf_model(3, 4, 2025);
  Report rep = check_solvability(m);
  CHECK(rep.all_pass());

  // 1x1 is vacuously solvable
  CHECK(check_solvability(one_vertex_model(fx::r())).all_pass());

  // perturb gamma_22 with an incompatible element
  LatticeModel broken = m;
  Rng rng(4);
  broken.gamma[1][1] =
      GroupoidElement(sample_fiber(object_label(rng.nonzero_scalar(), rng.nonzero_scalar()),
                                   FiberSide::Source, rng));
  Report bad = check_solvability(broken);
  CHECK_FALSE(bad.all_pass());
  bool found_witness = false;
  for (const auto& c : bad.checks)
    if (!c.pass && c.name.find("(2,2)") != std::string::npos) found_witness = true;
  CHECK(found_witness);
}

TEST_CASE("vertex weight convention anchors") {
  SixVertexMatrix u = fx::r();
  CHECK(vertex_weight(u, 0, 0, 0, 0) == u.a1);
  CHECK(vertex_weight(u, 1, 1, 1, 1) == u.a2);
  CHECK(vertex_weight(u, 0, 1, 1, 0) == u.c2);
  CHECK(vertex_weight(u, 1, 0, 0, 1) == u.c1);
  CHECK(vertex_weight(u, 0, 1, 0, 1) == u.b1);
  CHECK(vertex_weight(u, 1, 0, 1, 0) == u.b2);
}

TEST_CASE("1x1 partition anchors") {
  LatticeModel m = one_vertex_model(fx::r());
  BoundaryAssignment bc;
  bc.mode = HorizontalMode::Fixed;
  bc.west = {0};
  bc.east = {0};
  bc.south = {0};
  bc.north = {0};
  CHECK(partition_enumerate(m, bc) == fx::r().a1);
  CHECK(partition_transfer(m, bc) == fx::r().a1);

  bc.west = {0};
  bc.east = {1};
  bc.south = {1};
  bc.north = {0};
  CHECK(partition_enumerate(m, bc) == fx::r().c2);

  bc.west = {1};
  bc.east = {0};
  bc.south = {0};
  bc.north = {1};
  CHECK(partition_enumerate(m, bc) == fx::r().c1);

  BoundaryAssignment per;
  per.mode = HorizontalMode::Periodic;
  per.south = {0};
  per.north = {0};
  CHECK(partition_enumerate(m, per) == fx::r().a1 + fx::r().b2);
}

TEST_CASE("n = 1 transfer matrix") {
  LatticeModel m = one_vertex_model(fx::r());
  TransferOperator t = transfer_matrix(m, 1);
  CHECK(t.op.dim() == 2);
  CHECK(t.op.at(0, 0) == fx::r().a1 + fx::r().b2);  // 5 + 2
  CHECK(t.op.at(1, 1) == fx::r().b1 + fx::r().a2);  // 4 + 5
  CHECK(t.op.at(0, 1).is_zero());
  CHECK(t.op.at(1, 0).is_zero());
}

TEST_CASE("enumeration equals transfer contraction") {
  Rng rng(555);
  for (std::uint64_t k = 0; k < 8; ++k) {
    LatticeModel m = seeded_nf_model(1 + static_cast<int>(k % 3), 1 + static_cast<int>(k / 3),
                                     900 + k);
    BoundaryAssignment bc = random_bc(
        m, k % 2 == 0 ? HorizontalMode::Fixed : HorizontalMode::Periodic, rng);
    CHECK(partition_enumerate(m, bc) == partition_transfer(m, bc));
  }
}

TEST_CASE("adjacent transfer matrices commute when pi(rho) is invertible") {
  int invertible_seen = 0;
  for (std::uint64_t seed = 40; seed < 46; ++seed) {
    LatticeModel m = seeded_nf_model(3, 2 + static_cast<int>(seed % 3), seed);
    for (const CommuteCheck& c : transfer_commutation(m)) {
      CHECK(c.rho_defined);
      if (c.rho_invertible) {
        ++invertible_seen;
        CHECK(c.commute);
      }
    }
  }
  CHECK(invertible_seen > 0);
}

TEST_CASE("row swap leaves the periodic partition function unchanged") {
  Rng rng(77);
  ObjectLabel d = object_label(3, 2);
  std::vector<GroupoidElement> phi, psi;
  for (int i = 0; i < 3; ++i) phi.emplace_back(sample_fiber(d, FiberSide::Source, rng));
  for (int j = 0; j < 2; ++j) psi.emplace_back(sample_fiber(d, FiberSide::Target, rng));
  LatticeModel m = build_model(Label(d), phi, psi);
  std::swap(phi[0], phi[1]);
  LatticeModel swapped = build_model(Label(d), phi, psi);
  BoundaryAssignment bc;
  bc.mode = HorizontalMode::Periodic;
  bc.south = {1, 0};
  bc.north = {0, 1};
  CHECK(partition_transfer(m, bc) == partition_transfer(swapped, bc));
}

TEST_CASE("free-fermionic group models are solvable lattices too") {
  Rng rng(91);
  auto draw_ff = [&rng]() {
    while (true) {
      Scalar g11 = rng.nonzero_scalar(), g12 = rng.nonzero_scalar();
      Scalar g21 = rng.nonzero_scalar(), g22 = rng.nonzero_scalar();
      if ((g11 * g22 - g12 * g21).is_zero()) continue;
      return GroupoidElement(ff_element(g11, g12, g21, g22, rng.nonzero_scalar()));
    }
  };
  std::vector<GroupoidElement> phi{draw_ff(), draw_ff()};
  std::vector<GroupoidElement> psi{draw_ff(), draw_ff(), draw_ff()};
  LatticeModel m = build_model(Label(UnitLabel{}), phi, psi);
  CHECK(check_solvability(m).all_pass());
  Rng rng2(14);
  BoundaryAssignment bc = random_bc(m, HorizontalMode::Periodic, rng2);
  CHECK(partition_enumerate(m, bc) == partition_transfer(m, bc));
  for (const CommuteCheck& c : transfer_commutation(m))
    if (c.rho_invertible) CHECK(c.commute);
}

TEST_CASE("five-vertex models compose into solvable lattices") {
  Rng rng(101);
  auto with_label = [&rng](const Scalar& eps, bool star_side) {
    while (true) {
      Scalar a1 = rng.nonzero_scalar(), a2 = rng.nonzero_scalar();
      Scalar c1 = rng.nonzero_scalar(), c2 = rng.nonzero_scalar();
      Scalar n = a1 * a2 - c1 * c2;
      if (n.is_zero()) continue;
      return GroupoidElement(
          fv_lift(six_vertex(a1, a2, n / ((star_side ? a2 : a1) * eps), 0, c1, c2)));
    }
  };
  Scalar d = scalar(3, 4);
  std::vector<GroupoidElement> phi{with_label(d, false), with_label(d, false)};
  std::vector<GroupoidElement> psi{with_label(d, true), with_label(d, true)};
  LatticeModel m = build_model(Label(d), phi, psi);
  CHECK(check_solvability(m).all_pass());
  Rng rng2(3);
  BoundaryAssignment bc = random_bc(m, HorizontalMode::Fixed, rng2);
  CHECK(partition_enumerate(m, bc) == partition_transfer(m, bc));
}

TEST_CASE("size caps surface as errors") {
  Rng rng(1);
  ObjectLabel d = object_label(2, 3);
  std::vector<GroupoidElement> phi, psi;
  for (int i = 0; i < 2; ++i) phi.emplace_back(sample_fiber(d, FiberSide::Source, rng));
  for (int j = 0; j < 3; ++j) psi.emplace_back(sample_fiber(d, FiberSide::Target, rng));
  LatticeModel m = build_model(Label(d), phi, psi);
  BoundaryAssignment bc = random_bc(m, HorizontalMode::Fixed, rng);
  LatticeLimits tight;
  tight.max_interior_edges = 3;
  CHECK_THROWS_AS(partition_enumerate(m, bc, tight), Error);
  tight.max_transfer_cols = 2;
  CHECK_THROWS_AS(partition_transfer(m, bc, tight), Error);
  tight.max_operator_cols = 2;
  CHECK_THROWS_AS(transfer_matrix(m, 1, tight), Error);
}
