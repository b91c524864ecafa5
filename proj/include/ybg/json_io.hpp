#pragma once

#include <json.hpp>

#include "ybg/lattice.hpp"

namespace ybg {

// Wire format notes:
//  - scalars carry canonical reduced fraction strings, never floats:
//    {"re":"p/q","im":"r/s"};
//  - groupoid elements are tagged {"kind":"ff"|"nf"|"fv", ...}; the bare
//    nf/fv/ff shapes are also accepted where the kind is inferable.
using json = nlohmann::ordered_json;

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);  // ParseError

json to_json(const SixVertexMatrix& u);
SixVertexMatrix six_vertex_from_json(const json& j);

json to_json(const ObjectLabel& d);
ObjectLabel object_label_from_json(const json& j);

json to_json(const OperatorMatrix& m);
OperatorMatrix operator_from_json(const json& j);

json to_json(const FfElement& g);
FfElement ff_from_json(const json& j);

json to_json(const NfElement& e);
NfElement nf_from_json(const json& j);

json to_json(const FvElement& e);
FvElement fv_from_json(const json& j);

json to_json(const GroupoidElement& g);           // tagged
GroupoidElement element_from_json(const json& j);  // tagged or inferred

json to_json(const Label& d);
Label label_from_json(const json& j);

json to_json(const Region& r);

json to_json(const LatticeModel& m);  // includes the gamma grid
LatticeModel model_from_json(const json& j);  // gamma ignored on input, rebuilt

json to_json(const BoundaryAssignment& bc);
BoundaryAssignment boundary_from_json(const json& j);

json to_json(const Report& r);

}  // namespace ybg
