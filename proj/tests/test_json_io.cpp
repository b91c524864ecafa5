#include <doctest.h>

#include "fixtures.hpp"
#include "ybg/json_io.hpp"
#include "ybg/rng.hpp"

using namespace ybg;

TEST_CASE("scalar wire format") {
  Scalar s(Rational(-23, 7), Rational(1, 2));
  json j = to_json(s);
  CHECK(j["re"] == "-23/7");
  CHECK(j["im"] == "1/2");
  CHECK(scalar_from_json(j) == s);
  CHECK(scalar_from_json(json("5/7")) == scalar(5, 7));   // string shorthand
  CHECK(scalar_from_json(json{{"re", "3"}}) == Scalar(3)); // im defaults to 0
  CHECK_THROWS_AS(scalar_from_json(json{{"im", "1/2"}}), Error);
  CHECK_THROWS_AS(scalar_from_json(json{{"re", "x"}}), Error);
}

TEST_CASE("matrix and element round-trips") {
  CHECK(six_vertex_from_json(to_json(fx::v0())) == fx::v0());
  CHECK_THROWS_AS(six_vertex_from_json(json{{"a1", "1"}}), Error);

  NfElement e = boundary_element(fx::g_b(), 5, 7);
  CHECK(nf_from_json(to_json(e)) == e);
  CHECK_THROWS_AS(nf_from_json(json{{"matrix", to_json(fx::r())}, {"d1", "1"}, {"d2", "1"}}),
                  Error);  // labels violate the fiber invariant

  FfElement g = ff_element(5, -2, 4, -1, 3);
  CHECK(ff_from_json(to_json(g)) == g);

  FvElement v = fv_lift(fx::u5());
  CHECK(fv_from_json(to_json(v)) == v);
}

TEST_CASE("tagged elements round-trip and infer their kind") {
  GroupoidElement elts[] = {GroupoidElement(lift(fx::r())),
                            GroupoidElement(ff_element(5, -2, 4, -1, 3)),
                            GroupoidElement(fv_lift(fx::u5()))};
  for (const GroupoidElement& g : elts) {
    json j = to_json(g);
    CHECK(element_from_json(j) == g);
    j.erase("kind");  // inference path
    CHECK(element_from_json(j) == g);
  }
  CHECK_THROWS_AS(element_from_json(json::object()), Error);
}

TEST_CASE("labels") {
  CHECK(label_from_json(to_json(Label(UnitLabel{}))) == Label(UnitLabel{}));
  CHECK(label_from_json(to_json(Label(object_label(2, 3)))) == Label(object_label(2, 3)));
  CHECK(label_from_json(to_json(Label(scalar(3, 4)))) == Label(scalar(3, 4)));
}

TEST_CASE("operator matrices") {
  OperatorMatrix m = to_operator(fx::r());
  CHECK(operator_from_json(to_json(m)) == m);
  json j = to_json(m);
  CHECK(j["dim"] == 4);
  CHECK(j["entries"][0][0]["re"] == "5/1");
}

TEST_CASE("model JSON rebuilds the gamma grid") {
  Rng rng(6);
  ObjectLabel d = object_label(2, 3);
  std::vector<GroupoidElement> phi{GroupoidElement(sample_fiber(d, FiberSide::Source, rng)),
                                   GroupoidElement(sample_fiber(d, FiberSide::Source, rng))};
  std::vector<GroupoidElement> psi{GroupoidElement(sample_fiber(d, FiberSide::Target, rng))};
  LatticeModel m = build_model(Label(d), phi, psi);
  json j = to_json(m);
  CHECK(j["m"] == 2);
  CHECK(j["n"] == 1);
  LatticeModel m2 = model_from_json(j);
  CHECK(m2.gamma == m.gamma);
  j.erase("gamma");  // optional on input
  CHECK(model_from_json(j).gamma == m.gamma);
}

TEST_CASE("boundary assignments") {
  BoundaryAssignment bc;
  bc.mode = HorizontalMode::Fixed;
  bc.west = {0, 1};
  bc.east = {1, 0};
  bc.south = {1};
  bc.north = {0};
  json j = to_json(bc);
  BoundaryAssignment rt = boundary_from_json(j);
  CHECK(rt.mode == HorizontalMode::Fixed);
  CHECK(rt.west == bc.west);
  CHECK(rt.south == bc.south);
  CHECK_THROWS_AS(boundary_from_json(json{{"mode", "weird"}}), Error);
  CHECK_THROWS_AS(boundary_from_json(json{{"mode", "fixed"}, {"west", {0, 2}}}), Error);
}

TEST_CASE("random elements survive a serialization round-trip") {
  Rng rng(808);
  for (int k = 0; k < 60; ++k) {
    ObjectLabel d = object_label(rng.nonzero_scalar(), rng.nonzero_scalar());
    GroupoidElement e{sample_fiber(d, k % 2 ? FiberSide::Source : FiberSide::Target, rng)};
    json j = to_json(e);
    CHECK(element_from_json(json::parse(j.dump())) == e);
  }
  // complex entries ride along
  Scalar z(Rational(2, 3), Rational(-5, 7));
  SixVertexMatrix m = six_vertex(z, 1, z * z, 2, z + Scalar(1), 1);
  CHECK(six_vertex_from_json(json::parse(to_json(m).dump())) == m);
}

TEST_CASE("six-vertex JSON accepts the compact string form") {
  json j{{"a1", "5"}, {"a2", "5"}, {"b1", "4"}, {"b2", "2"}, {"c1", "3"}, {"c2", "1"}};
  CHECK(six_vertex_from_json(j) == fx::r());
}
