#include "ybg/json_io.hpp"

namespace ybg {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(Errc::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str_field(const json& j) {
  if (!j.is_string()) fail(Errc::ParseError, "expected a string");
  return j.get<std::string>();
}

std::vector<int> states_from_json(const json& j) {
  if (!j.is_array()) fail(Errc::ParseError, "expected an edge-state array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1))
      fail(Errc::ParseError, "edge states are 0 or 1");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json to_json(const Scalar& s) {
  return json{{"re", rational_to_string(s.re)}, {"im", rational_to_string(s.im)}};
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string())  // shorthand for a real rational
    return Scalar(rational_from_string(j.get<std::string>()));
  Scalar s(rational_from_string(str_field(field(j, "re"))));
  if (j.contains("im")) s.im = rational_from_string(str_field(j.at("im")));
  return s;
}

json to_json(const SixVertexMatrix& u) {
  return json{{"a1", to_json(u.a1)}, {"a2", to_json(u.a2)}, {"b1", to_json(u.b1)},
              {"b2", to_json(u.b2)}, {"c1", to_json(u.c1)}, {"c2", to_json(u.c2)}};
}

SixVertexMatrix six_vertex_from_json(const json& j) {
  return six_vertex(scalar_from_json(field(j, "a1")), scalar_from_json(field(j, "a2")),
                    scalar_from_json(field(j, "b1")), scalar_from_json(field(j, "b2")),
                    scalar_from_json(field(j, "c1")), scalar_from_json(field(j, "c2")));
}

json to_json(const ObjectLabel& d) {
  return json{{"d1", to_json(d.d1)}, {"d2", to_json(d.d2)}};
}

ObjectLabel object_label_from_json(const json& j) {
  return object_label(scalar_from_json(field(j, "d1")), scalar_from_json(field(j, "d2")));
}

json to_json(const OperatorMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.dim()}, {"entries", std::move(rows)}};
}

OperatorMatrix operator_from_json(const json& j) {
  int dim = field(j, "dim").get<int>();
  OperatorMatrix m(dim);
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != static_cast<size_t>(dim))
    fail(Errc::ParseError, "entries must be dim rows");
  for (int i = 0; i < dim; ++i) {
    const json& row = entries.at(i);
    if (!row.is_array() || row.size() != static_cast<size_t>(dim))
      fail(Errc::ParseError, "entries must be dim x dim");
    for (int k = 0; k < dim; ++k) m.at(i, k) = scalar_from_json(row.at(k));
  }
  return m;
}

json to_json(const FfElement& g) {
  return json{{"g", json::array({json::array({to_json(g.g11), to_json(g.g12)}),
                                 json::array({to_json(g.g21), to_json(g.g22)})})},
              {"c1", to_json(g.c1)}};
}

FfElement ff_from_json(const json& j) {
  const json& g = field(j, "g");
  if (!g.is_array() || g.size() != 2 || !g[0].is_array() || g[0].size() != 2 ||
      !g[1].is_array() || g[1].size() != 2)
    fail(Errc::ParseError, "g must be a 2x2 array");
  return ff_element(scalar_from_json(g[0][0]), scalar_from_json(g[0][1]),
                    scalar_from_json(g[1][0]), scalar_from_json(g[1][1]),
                    scalar_from_json(field(j, "c1")));
}

json to_json(const NfElement& e) {
  return json{{"matrix", to_json(e.matrix)}, {"d1", to_json(e.d1)}, {"d2", to_json(e.d2)}};
}

NfElement nf_from_json(const json& j) {
  return nf_element(six_vertex_from_json(field(j, "matrix")),
                    scalar_from_json(field(j, "d1")), scalar_from_json(field(j, "d2")));
}

json to_json(const FvElement& e) {
  return json{{"matrix", to_json(e.matrix)}, {"eps", to_json(e.eps)}};
}

FvElement fv_from_json(const json& j) {
  return fv_element(six_vertex_from_json(field(j, "matrix")),
                    scalar_from_json(field(j, "eps")));
}

json to_json(const GroupoidElement& g) {
  if (const auto* ff = std::get_if<FfElement>(&g)) {
    json j = to_json(*ff);
    return json{{"kind", "ff"}, {"g", j["g"]}, {"c1", j["c1"]}};
  }
  if (const auto* nf = std::get_if<NfElement>(&g)) {
    json j = to_json(*nf);
    return json{{"kind", "nf"}, {"matrix", j["matrix"]}, {"d1", j["d1"]}, {"d2", j["d2"]}};
  }
  const auto& fv = std::get<FvElement>(g);
  json j = to_json(fv);
  return json{{"kind", "fv"}, {"matrix", j["matrix"]}, {"eps", j["eps"]}};
}

GroupoidElement element_from_json(const json& j) {
  std::string kind;
  if (j.contains("kind"))
    kind = str_field(j.at("kind"));
  else if (j.contains("g"))
    kind = "ff";
  else if (j.contains("eps"))
    kind = "fv";
  else if (j.contains("d1"))
    kind = "nf";
  else
    fail(Errc::ParseError, "cannot infer element kind");
  if (kind == "ff") return ff_from_json(j);
  if (kind == "nf") return nf_from_json(j);
  if (kind == "fv") return fv_from_json(j);
  fail(Errc::ParseError, "unknown element kind '" + kind + "'");
}

json to_json(const Label& d) {
  if (std::holds_alternative<UnitLabel>(d)) return json::object();
  if (const auto* l = std::get_if<ObjectLabel>(&d)) return to_json(*l);
  return json{{"eps", to_json(std::get<Scalar>(d))}};
}

Label label_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "label must be an object");
  if (j.contains("d1")) return object_label_from_json(j);
  if (j.contains("eps")) return Label(scalar_from_json(j.at("eps")));
  if (j.empty()) return UnitLabel{};
  fail(Errc::ParseError, "unrecognized label shape");
}

json to_json(const Region& r) {
  return json{
      {"flags",
       {{"a1_nonzero", r.a1_nonzero},
        {"a2_nonzero", r.a2_nonzero},
        {"b1_nonzero", r.b1_nonzero},
        {"b2_nonzero", r.b2_nonzero},
        {"det_mid_nonzero", r.det_mid_nonzero},
        {"n_nonzero", r.n_nonzero},
        {"aa_equals_cc", r.aa_equals_cc},
        {"bb_equals_cc", r.bb_equals_cc}}},
      {"sets",
       {{"S_times", r.in_s_times},
        {"S_bullet", r.in_s_bullet},
        {"S_circ", r.in_s_circ},
        {"Omega", r.in_omega}}},
      {"free_fermionic", r.free_fermionic},
      {"region", region_tag_name(r.tag)}};
}

json to_json(const LatticeModel& m) {
  json phi = json::array(), psi = json::array(), gamma = json::array();
  for (const auto& p : m.phi) phi.push_back(to_json(p));
  for (const auto& q : m.psi) psi.push_back(to_json(q));
  for (const auto& row : m.gamma) {
    json r = json::array();
    for (const auto& g : row) r.push_back(to_json(g));
    gamma.push_back(std::move(r));
  }
  return json{{"m", m.rows},         {"n", m.cols},       {"d", to_json(m.d)},
              {"phi", std::move(phi)}, {"psi", std::move(psi)}, {"gamma", std::move(gamma)}};
}

LatticeModel model_from_json(const json& j) {
  Label d = label_from_json(field(j, "d"));
  std::vector<GroupoidElement> phi, psi;
  for (const auto& p : field(j, "phi")) phi.push_back(element_from_json(p));
  for (const auto& q : field(j, "psi")) psi.push_back(element_from_json(q));
  return build_model(d, std::move(phi), std::move(psi));
}

json to_json(const BoundaryAssignment& bc) {
  json j{{"mode", bc.mode == HorizontalMode::Fixed ? "fixed" : "periodic"}};
  if (bc.mode == HorizontalMode::Fixed) {
    j["west"] = bc.west;
    j["east"] = bc.east;
  }
  j["south"] = bc.south;
  j["north"] = bc.north;
  return j;
}

BoundaryAssignment boundary_from_json(const json& j) {
  BoundaryAssignment bc;
  std::string mode = str_field(field(j, "mode"));
  if (mode == "fixed")
    bc.mode = HorizontalMode::Fixed;
  else if (mode == "periodic")
    bc.mode = HorizontalMode::Periodic;
  else
    fail(Errc::ParseError, "mode must be 'fixed' or 'periodic'");
  if (bc.mode == HorizontalMode::Fixed) {
    bc.west = states_from_json(field(j, "west"));
    bc.east = states_from_json(field(j, "east"));
  }
  bc.south = states_from_json(field(j, "south"));
  bc.north = states_from_json(field(j, "north"));
  return bc;
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return json{{"checks", std::move(checks)}, {"all_pass", r.all_pass()}};
}

}  // namespace ybg
