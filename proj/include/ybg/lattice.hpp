#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ybg/five_vertex.hpp"
#include "ybg/ff_group.hpp"
#include "ybg/groupoid_nf.hpp"
#include "ybg/operator_matrix.hpp"

namespace ybg {

// One element of the disjoint union of the three composition structures.
// Composition never crosses alternatives; attempting it is a TagMismatch.
using GroupoidElement = std::variant<FfElement, NfElement, FvElement>;

// The ff group has a one-point object set.
struct UnitLabel {
  friend bool operator==(const UnitLabel&, const UnitLabel&) = default;
};

using Label = std::variant<UnitLabel, ObjectLabel, Scalar>;

Label delta(const GroupoidElement& g);
Label delta_star(const GroupoidElement& g);
GroupoidElement inverse(const GroupoidElement& g);
bool composable(const GroupoidElement& u, const GroupoidElement& v);  // TagMismatch
GroupoidElement compose(const GroupoidElement& u, const GroupoidElement& v);
// TagMismatch / ObjectMismatch

// Vertex weight operator of an element; for nf and fv elements the blown-up
// labels are forgotten (the map is not injective on boundary fibers).
SixVertexMatrix pi(const GroupoidElement& g);

std::string to_string(const Label& d);

struct LatticeModel {
  int rows = 0, cols = 0;
  Label d;
  std::vector<GroupoidElement> phi;                // rows, Delta(phi_i) = d
  std::vector<GroupoidElement> psi;                // cols, Delta(psi_j') = d
  std::vector<std::vector<GroupoidElement>> gamma; // gamma[i][j] = phi_i * psi_j
};

// Populates the grid and verifies the construction invariants:
// Delta(gamma_ij) constant down each column, Delta(gamma_ij') constant along
// each row. ObjectMismatch names the offending index.
LatticeModel build_model(const Label& d, std::vector<GroupoidElement> phi,
                         std::vector<GroupoidElement> psi);

// gamma_{i,1} * gamma_{i+1,1}' (rows are 1-based, 1 <= i < rows).
GroupoidElement row_rho(const LatticeModel& m, int i);  // IndexOutOfRange
// gamma_{1,j}' * gamma_{1,j+1} (1 <= j < cols).
GroupoidElement col_rho(const LatticeModel& m, int j);  // IndexOutOfRange

struct Check {
  std::string name;
  bool pass;
  std::string witness;  // empty when passing
};

struct Report {
  std::vector<Check> checks;

  bool all_pass() const;
};

// Row and column solvability: every gamma_{i,j} * gamma_{i+1,j}' defined and
// independent of j (dually for columns), plus the per-site Yang-Baxter
// instances [[pi(rho_i), pi(gamma_{i,j}), pi(gamma_{i+1,j})]] = 0.
Report check_solvability(const LatticeModel& m);

enum class HorizontalMode { Fixed, Periodic };

struct BoundaryAssignment {
  HorizontalMode mode = HorizontalMode::Fixed;
  std::vector<int> west, east;   // one state per row; ignored when periodic
  std::vector<int> south, north; // one state per column
};

struct LatticeLimits {
  int max_interior_edges = 24;   // enumeration cost is 2^edges before pruning
  int max_transfer_cols = 12;    // partition_transfer state vector is 2^cols
  int max_operator_cols = 8;     // materialized transfer operator is 4^cols
};

// Weight of the vertex configuration (west, south, east, north) at an
// element g: pi(g)[2*east + north][2*south + west]. This column pair order
// is the one under which the Yang-Baxter commutator is exactly the row
// exchange relation, making the transfer matrices below commute.
Scalar vertex_weight(const SixVertexMatrix& op, int w, int s, int e, int n);

// Boltzmann sum over all interior edge assignments. Exact; prunes through
// the six-vertex sparsity. SizeCap over limits.max_interior_edges.
Scalar partition_enumerate(const LatticeModel& m, const BoundaryAssignment& bc,
                           const LatticeLimits& limits = {});

struct TransferOperator {
  int cols = 0;
  OperatorMatrix op;  // dimension 2^cols
};

// Periodic row transfer matrix of row i (1-based): contract the row's vertex
// operators left to right along the horizontal space and trace it out.
TransferOperator transfer_matrix(const LatticeModel& m, int i,
                                 const LatticeLimits& limits = {});

// Z = <north| T_1 ... T_rows |south> (periodic), or the same row-by-row
// contraction carrying the fixed west/east states. Equals
// partition_enumerate on every input where both are defined.
Scalar partition_transfer(const LatticeModel& m, const BoundaryAssignment& bc,
                          const LatticeLimits& limits = {});

// pi(rho) is invertible iff a1, a2 and the middle-block determinant are
// all nonzero.
bool pi_invertible(const SixVertexMatrix& u);

struct CommuteCheck {
  int row = 0;              // pair (row, row+1), 1-based
  bool rho_defined = false;
  bool rho_invertible = false;
  bool commute = false;
};

// T_i T_{i+1} vs T_{i+1} T_i for every adjacent row pair.
std::vector<CommuteCheck> transfer_commutation(const LatticeModel& m,
                                               const LatticeLimits& limits = {});

}  // namespace ybg
