#include "ybg/lattice.hpp"

#include <array>
#include <utility>

namespace ybg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const char* tag_name(const GroupoidElement& g) {
  return std::visit(overloaded{[](const FfElement&) { return "ff"; },
                               [](const NfElement&) { return "nf"; },
                               [](const FvElement&) { return "fv"; }},
                    g);
}

}  // namespace

Label delta(const GroupoidElement& g) {
  return std::visit(overloaded{[](const FfElement&) -> Label { return UnitLabel{}; },
                               [](const NfElement& e) -> Label { return nf_delta(e); },
                               [](const FvElement& e) -> Label { return fv_delta(e); }},
                    g);
}

Label delta_star(const GroupoidElement& g) {
  return std::visit(overloaded{[](const FfElement&) -> Label { return UnitLabel{}; },
                               [](const NfElement& e) -> Label { return nf_delta_star(e); },
                               [](const FvElement& e) -> Label { return fv_delta_star(e); }},
                    g);
}

GroupoidElement inverse(const GroupoidElement& g) {
  return std::visit(
      overloaded{[](const FfElement& e) -> GroupoidElement { return ff_inverse(e); },
                 [](const NfElement& e) -> GroupoidElement { return nf_inverse(e); },
                 [](const FvElement& e) -> GroupoidElement { return fv_inverse(e); }},
      g);
}

bool composable(const GroupoidElement& u, const GroupoidElement& v) {
  if (u.index() != v.index())
    fail(Errc::TagMismatch, std::string("cannot relate ") + tag_name(u) + " with " + tag_name(v));
  if (std::holds_alternative<FfElement>(u)) return true;
  if (std::holds_alternative<NfElement>(u))
    return composable(std::get<NfElement>(u), std::get<NfElement>(v));
  return fv_composable(std::get<FvElement>(u), std::get<FvElement>(v));
}

GroupoidElement compose(const GroupoidElement& u, const GroupoidElement& v) {
  if (u.index() != v.index())
    fail(Errc::TagMismatch, std::string("cannot compose ") + tag_name(u) + " with " + tag_name(v));
  if (std::holds_alternative<FfElement>(u))
    return ff_compose(std::get<FfElement>(u), std::get<FfElement>(v));
  if (std::holds_alternative<NfElement>(u))
    return compose(std::get<NfElement>(u), std::get<NfElement>(v));
  return fv_compose(std::get<FvElement>(u), std::get<FvElement>(v));
}

SixVertexMatrix pi(const GroupoidElement& g) {
  return std::visit(overloaded{[](const FfElement& e) { return ff_embed(e); },
                               [](const NfElement& e) { return e.matrix; },
                               [](const FvElement& e) { return e.matrix; }},
                    g);
}

std::string to_string(const Label& d) {
  return std::visit(overloaded{[](const UnitLabel&) { return std::string("()"); },
                               [](const ObjectLabel& l) { return to_string(l); },
                               [](const Scalar& s) { return to_string(s); }},
                    d);
}

LatticeModel build_model(const Label& d, std::vector<GroupoidElement> phi,
                         std::vector<GroupoidElement> psi) {
  if (phi.empty() || psi.empty())
    fail(Errc::InvalidElement, "model needs at least one row and one column");
  for (const auto& g : phi)
    if (g.index() != phi.front().index() || g.index() != psi.front().index())
      fail(Errc::TagMismatch, "phi/psi mix groupoid components");
  for (const auto& g : psi)
    if (g.index() != phi.front().index())
      fail(Errc::TagMismatch, "phi/psi mix groupoid components");

  for (size_t i = 0; i < phi.size(); ++i)
    if (delta(phi[i]) != d)
      fail(Errc::ObjectMismatch, "Delta(phi_" + std::to_string(i + 1) + ") = " +
                                     to_string(delta(phi[i])) + " != d = " + to_string(d));
  for (size_t j = 0; j < psi.size(); ++j)
    if (delta_star(psi[j]) != d)
      fail(Errc::ObjectMismatch, "Delta(psi_" + std::to_string(j + 1) + "') = " +
                                     to_string(delta_star(psi[j])) + " != d = " + to_string(d));

  LatticeModel m;
  m.rows = static_cast<int>(phi.size());
  m.cols = static_cast<int>(psi.size());
  m.d = d;
  m.gamma.reserve(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) {
    std::vector<GroupoidElement> row;
    row.reserve(psi.size());
    for (size_t j = 0; j < psi.size(); ++j) row.push_back(compose(phi[i], psi[j]));
    m.gamma.push_back(std::move(row));
  }
  m.phi = std::move(phi);
  m.psi = std::move(psi);

  // closing observation: Delta(gamma_ij) depends only on j, Delta(gamma_ij')
  // only on i
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      if (delta(m.gamma[i][j]) != delta(m.psi[j]))
        fail(Errc::ObjectMismatch, "Delta(gamma) not column-constant at (" +
                                       std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      if (delta_star(m.gamma[i][j]) != delta_star(m.phi[i]))
        fail(Errc::ObjectMismatch, "Delta(gamma') not row-constant at (" +
                                       std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  return m;
}

GroupoidElement row_rho(const LatticeModel& m, int i) {
  if (i < 1 || i >= m.rows)
    fail(Errc::IndexOutOfRange, "row pair index " + std::to_string(i) + " of " +
                                    std::to_string(m.rows) + " rows");
  return compose(m.gamma[i - 1][0], inverse(m.gamma[i][0]));
}

GroupoidElement col_rho(const LatticeModel& m, int j) {
  if (j < 1 || j >= m.cols)
    fail(Errc::IndexOutOfRange, "column pair index " + std::to_string(j) + " of " +
                                    std::to_string(m.cols) + " columns");
  return compose(inverse(m.gamma[0][j - 1]), m.gamma[0][j]);
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Report check_solvability(const LatticeModel& m) {
  Report report;
  auto idx = [](int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  auto run = [&report](std::string name, auto&& body) {
    try {
      std::string witness = body();
      report.checks.push_back({std::move(name), witness.empty(), std::move(witness)});
    } catch (const Error& e) {
      report.checks.push_back({std::move(name), false, e.what()});
    }
  };

  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < m.rows; ++i)
      run("delta_column_constant" + idx(i + 1, j + 1), [&]() -> std::string {
        if (delta(m.gamma[i][j]) == delta(m.gamma[0][j])) return "";
        return "Delta(gamma" + idx(i + 1, j + 1) + ") = " + to_string(delta(m.gamma[i][j]));
      });
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      run("delta_star_row_constant" + idx(i + 1, j + 1), [&]() -> std::string {
        if (delta_star(m.gamma[i][j]) == delta_star(m.gamma[i][0])) return "";
        return "Delta(gamma'" + idx(i + 1, j + 1) + ") = " +
               to_string(delta_star(m.gamma[i][j]));
      });

  for (int i = 1; i < m.rows; ++i) {
    GroupoidElement rho = m.gamma[0][0];  // placeholder; reassigned below
    bool have_rho = false;
    run("row_rho_defined(i=" + std::to_string(i) + ")", [&]() -> std::string {
      rho = row_rho(m, i);
      have_rho = true;
      return "";
    });
    if (!have_rho) continue;
    for (int j = 0; j < m.cols; ++j) {
      run("row_rho_constant" + idx(i, j + 1), [&]() -> std::string {
        GroupoidElement w = compose(m.gamma[i - 1][j], inverse(m.gamma[i][j]));
        if (w == rho) return "";
        return "gamma_" + idx(i, j + 1) + " * gamma_" + idx(i + 1, j + 1) +
               "' differs from rho_" + std::to_string(i);
      });
      run("row_ybe" + idx(i, j + 1), [&]() -> std::string {
        OperatorMatrix c = yb_commutator(pi(rho), pi(m.gamma[i - 1][j]), pi(m.gamma[i][j]));
        if (c.is_zero()) return "";
        return "[[pi(rho), pi(gamma), pi(gamma')]] != 0 at " + idx(i, j + 1);
      });
    }
  }

  for (int j = 1; j < m.cols; ++j) {
    GroupoidElement crho = m.gamma[0][0];
    bool have_crho = false;
    run("col_rho_defined(j=" + std::to_string(j) + ")", [&]() -> std::string {
      crho = col_rho(m, j);
      have_crho = true;
      return "";
    });
    if (!have_crho) continue;
    for (int i = 0; i < m.rows; ++i)
      run("col_rho_constant" + idx(i + 1, j), [&]() -> std::string {
        GroupoidElement w = compose(inverse(m.gamma[i][j - 1]), m.gamma[i][j]);
        if (w == crho) return "";
        return "gamma_" + idx(i + 1, j) + "' * gamma_" + idx(i + 1, j + 1) +
               " differs from col rho_" + std::to_string(j);
      });
  }
  return report;
}

Scalar vertex_weight(const SixVertexMatrix& op, int w, int s, int e, int n) {
  OperatorMatrix o = to_operator(op);
  return o.at(2 * e + n, 2 * s + w);
}

namespace {

// weight lookup against the flattened 4x4 operator, column pair (s, w)
inline const Scalar& wgt(const OperatorMatrix& op, int w, int s, int e, int n) {
  return op.at(2 * e + n, 2 * s + w);
}

struct Grid {
  int rows, cols;
  std::vector<OperatorMatrix> ops;  // row-major

  const OperatorMatrix& at(int i, int j) const { return ops[static_cast<size_t>(i) * cols + j]; }
};

Grid make_grid(const LatticeModel& m) {
  Grid g{m.rows, m.cols, {}};
  g.ops.reserve(static_cast<size_t>(m.rows) * m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) g.ops.push_back(to_operator(pi(m.gamma[i][j])));
  return g;
}

void check_bc(const LatticeModel& m, const BoundaryAssignment& bc) {
  auto states_ok = [](const std::vector<int>& v, size_t len) {
    if (v.size() != len) return false;
    for (int s : v)
      if (s != 0 && s != 1) return false;
    return true;
  };
  bool ok = states_ok(bc.south, m.cols) && states_ok(bc.north, m.cols);
  if (bc.mode == HorizontalMode::Fixed)
    ok = ok && states_ok(bc.west, m.rows) && states_ok(bc.east, m.rows);
  if (!ok) fail(Errc::ParseError, "boundary assignment does not match the grid");
}

// DFS over (east, south) choices per vertex in row-major order, pruning on
// zero weights. `vert` holds the vertical edge states between row i-1 and i.
struct Enumerator {
  const Grid& grid;
  const BoundaryAssignment& bc;
  std::vector<int> vert;
  Scalar total{};

  Enumerator(const Grid& g, const BoundaryAssignment& b) : grid(g), bc(b) {
    vert = b.north;
  }

  void run() {
    if (bc.mode == HorizontalMode::Fixed) {
      row(0, 0, bc.west[0], Scalar(1), -1);
    } else {
      row(0, 0, 0, Scalar(1), 0);
      row(0, 0, 1, Scalar(1), 1);
    }
  }

  void row(int i, int j, int h, Scalar acc, int h0) {
    if (j == grid.cols) {
      int want = bc.mode == HorizontalMode::Fixed ? bc.east[i] : h0;
      if (h != want) return;
      if (i + 1 == grid.rows) {
        total += acc;
        return;
      }
      if (bc.mode == HorizontalMode::Fixed) {
        row(i + 1, 0, bc.west[i + 1], std::move(acc), -1);
      } else {
        row(i + 1, 0, 0, acc, 0);
        row(i + 1, 0, 1, std::move(acc), 1);
      }
      return;
    }
    int n = vert[j];
    bool last_row = i + 1 == grid.rows;
    for (int e = 0; e <= 1; ++e)
      for (int s = 0; s <= 1; ++s) {
        if (last_row && s != bc.south[j]) continue;
        const Scalar& w = wgt(grid.at(i, j), h, s, e, n);
        if (w.is_zero()) continue;
        int saved = vert[j];
        vert[j] = s;
        row(i, j + 1, e, acc * w, h0);
        vert[j] = saved;
      }
  }
};

int interior_edges(const LatticeModel& m, HorizontalMode mode) {
  int horizontal = mode == HorizontalMode::Fixed ? m.rows * (m.cols - 1) : m.rows * m.cols;
  return horizontal + (m.rows - 1) * m.cols;
}

// Applies one row to the vector of vertical-state amplitudes: given
// amplitudes indexed by the states above the row, returns amplitudes indexed
// by the states below it. Column j occupies bit (cols-1-j).
std::vector<Scalar> apply_row(const Grid& grid, int i, const BoundaryAssignment& bc,
                              const std::vector<Scalar>& above) {
  int cols = grid.cols;
  size_t dim = static_cast<size_t>(1) << cols;
  std::vector<Scalar> below(dim);
  auto sweep = [&](int h_in, int h_out) {
    // amp[h][v]: amplitude with horizontal edge state h after the columns
    // processed so far; bits of v left of column j are already south values.
    std::array<std::vector<Scalar>, 2> amp = {std::vector<Scalar>(dim),
                                              std::vector<Scalar>(dim)};
    amp[h_in] = above;
    for (int j = 0; j < cols; ++j) {
      std::array<std::vector<Scalar>, 2> nxt = {std::vector<Scalar>(dim),
                                                std::vector<Scalar>(dim)};
      size_t bit = static_cast<size_t>(1) << (cols - 1 - j);
      for (int h = 0; h <= 1; ++h)
        for (size_t v = 0; v < dim; ++v) {
          const Scalar& a = amp[h][v];
          if (a.is_zero()) continue;
          int n = static_cast<int>((v & bit) != 0);
          for (int e = 0; e <= 1; ++e)
            for (int s = 0; s <= 1; ++s) {
              const Scalar& w = wgt(grid.at(i, j), h, s, e, n);
              if (w.is_zero()) continue;
              size_t nv = (v & ~bit) | (static_cast<size_t>(s) * bit);
              nxt[e][nv] += a * w;
            }
        }
      amp = std::move(nxt);
    }
    for (size_t v = 0; v < dim; ++v) below[v] += amp[h_out][v];
  };
  if (bc.mode == HorizontalMode::Fixed) {
    sweep(bc.west[i], bc.east[i]);
  } else {
    sweep(0, 0);
    sweep(1, 1);
  }
  return below;
}

size_t state_index(const std::vector<int>& bits) {
  size_t v = 0;
  for (int b : bits) v = (v << 1) | static_cast<size_t>(b);
  return v;
}

}  // namespace

Scalar partition_enumerate(const LatticeModel& m, const BoundaryAssignment& bc,
                           const LatticeLimits& limits) {
  check_bc(m, bc);
  if (interior_edges(m, bc.mode) > limits.max_interior_edges)
    fail(Errc::SizeCap, "grid exceeds max_interior_edges = " +
                            std::to_string(limits.max_interior_edges));
  Grid grid = make_grid(m);
  Enumerator en(grid, bc);
  en.run();
  return en.total;
}

TransferOperator transfer_matrix(const LatticeModel& m, int i, const LatticeLimits& limits) {
  if (i < 1 || i > m.rows) fail(Errc::IndexOutOfRange, "row " + std::to_string(i));
  if (m.cols > limits.max_operator_cols)
    fail(Errc::SizeCap,
         "materializing 2^" + std::to_string(m.cols) + " operator exceeds max_operator_cols");
  Grid grid = make_grid(m);
  BoundaryAssignment periodic;
  periodic.mode = HorizontalMode::Periodic;
  size_t dim = static_cast<size_t>(1) << m.cols;
  TransferOperator t{m.cols, OperatorMatrix(static_cast<int>(dim))};
  for (size_t k = 0; k < dim; ++k) {
    std::vector<Scalar> basis(dim);
    basis[k] = 1;
    std::vector<Scalar> img = apply_row(grid, i - 1, periodic, basis);
    for (size_t j = 0; j < dim; ++j)
      t.op.at(static_cast<int>(k), static_cast<int>(j)) = img[j];
  }
  return t;
}

Scalar partition_transfer(const LatticeModel& m, const BoundaryAssignment& bc,
                          const LatticeLimits& limits) {
  check_bc(m, bc);
  if (m.cols > limits.max_transfer_cols)
    fail(Errc::SizeCap,
         "transfer state vector 2^" + std::to_string(m.cols) + " exceeds max_transfer_cols");
  Grid grid = make_grid(m);
  size_t dim = static_cast<size_t>(1) << m.cols;
  std::vector<Scalar> vec(dim);
  vec[state_index(bc.north)] = 1;
  for (int i = 0; i < m.rows; ++i) vec = apply_row(grid, i, bc, vec);
  return vec[state_index(bc.south)];
}

bool pi_invertible(const SixVertexMatrix& u) {
  return !u.a1.is_zero() && !u.a2.is_zero() && !det_mid(u).is_zero();
}

std::vector<CommuteCheck> transfer_commutation(const LatticeModel& m,
                                               const LatticeLimits& limits) {
  std::vector<CommuteCheck> out;
  for (int i = 1; i < m.rows; ++i) {
    CommuteCheck c;
    c.row = i;
    try {
      GroupoidElement rho = row_rho(m, i);
      c.rho_defined = true;
      c.rho_invertible = pi_invertible(pi(rho));
    } catch (const Error&) {
      c.rho_defined = false;
    }
    TransferOperator a = transfer_matrix(m, i, limits);
    TransferOperator b = transfer_matrix(m, i + 1, limits);
    c.commute = (a.op * b.op - b.op * a.op).is_zero();
    out.push_back(c);
  }
  return out;
}

}  // namespace ybg
