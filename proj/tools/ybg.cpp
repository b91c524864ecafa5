// ybg: exact six-vertex Yang-Baxter groupoid toolkit, JSON in / JSON out.
//
// Exit codes: 0 success (or all checks pass), 1 a verified property or
// domain precondition failed (JSON report on stdout), 2 usage/input error
// (message on stderr).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ybg/json_io.hpp"
#include "ybg/solver.hpp"
#include "ybg/verify.hpp"

namespace {

using ybg::json;

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) ybg::fail(ybg::Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  // inline JSON is also accepted in place of a path
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    ybg::fail(ybg::Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

json maybe_inline(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    try {
      return json::parse(arg);
    } catch (const std::exception& e) {
      ybg::fail(ybg::Errc::ParseError, std::string("invalid JSON: ") + e.what());
    }
  }
  return read_json(arg);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int emit_domain_error(const ybg::Error& e) {
  emit(json{{"error", {{"code", ybg::errc_name(e.code())}, {"message", e.what()}}}});
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact six-vertex Yang-Baxter groupoid toolkit"};
  app.require_subcommand(1);

  std::string u_path, v_path, d_arg, side = "source", suite = "all";
  std::string input_path, model_path, bc_path, to_kind, method = "both";
  std::string d2_arg;
  std::uint64_t seed = 0;
  int samples = 100;
  bool have_seed = false;

  auto* classify_cmd = app.add_subcommand("classify", "region classification of a six-vertex matrix");
  classify_cmd->add_option("--u", u_path, "matrix JSON (path, inline, or -)")->required();

  auto* star_cmd = app.add_subcommand("star", "star involution of a six-vertex matrix");
  star_cmd->add_option("--u", u_path)->required();

  auto* delta_cmd = app.add_subcommand("delta", "object labels (Delta(u), Delta(u*))");
  delta_cmd->add_option("--u", u_path)->required();

  auto* solve_cmd = app.add_subcommand("solve-w", "normalized solution of [[u,w,v]] = 0");
  solve_cmd->add_option("--u", u_path)->required();
  solve_cmd->add_option("--v", v_path)->required();
  bool oracle = false;
  solve_cmd->add_flag("--oracle", oracle, "answer with the brute-force nullspace instead");

  auto* compose_cmd = app.add_subcommand("compose", "groupoid composition of two elements");
  compose_cmd->add_option("--u", u_path)->required();
  compose_cmd->add_option("--v", v_path)->required();

  auto* sample_cmd = app.add_subcommand("sample", "seeded fiber sample at a label");
  sample_cmd->add_option("--d", d_arg, "object label JSON")->required();
  sample_cmd->add_option("--side", side)->check(CLI::IsMember({"source", "target"}));
  sample_cmd->add_option("--seed", seed)->required();

  auto* idem_cmd = app.add_subcommand("idempotent", "idempotent element at a label");
  idem_cmd->add_option("--d", d_arg)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a seeded verification suite");
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"core", "ff", "nf", "fv", "lattice", "all"}));
  verify_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed)->required();

  auto* build_cmd = app.add_subcommand("model-build", "populate a lattice model grid");
  build_cmd->add_option("--input", input_path, "model JSON with d, phi, psi")->required();

  auto* check_cmd = app.add_subcommand("model-check", "row/column solvability report");
  check_cmd->add_option("--model", model_path)->required();

  auto* partition_cmd = app.add_subcommand("model-partition", "partition function of a model");
  partition_cmd->add_option("--model", model_path)->required();
  partition_cmd->add_option("--bc", bc_path, "boundary assignment JSON")->required();
  partition_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"enumerate", "transfer", "both"}));

  auto* commute_cmd = app.add_subcommand("model-transfer-commute",
                                         "adjacent transfer matrix commutation report");
  commute_cmd->add_option("--model", model_path)->required();

  auto* convert_cmd = app.add_subcommand("convert",
                                         "Omega_b <-> Phi_b identification of boundary elements");
  convert_cmd->add_option("--u", u_path, "nf or fv element JSON")->required();
  convert_cmd->add_option("--to", to_kind)->check(CLI::IsMember({"nf", "fv"}))->required();
  convert_cmd->add_option("--d2", d2_arg, "second label for fv -> nf");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);  // CLI11 prints to stderr; usage errors exit nonzero
  }
  (void)have_seed;

  try {
    if (*classify_cmd) {
      emit(ybg::to_json(ybg::classify(ybg::six_vertex_from_json(maybe_inline(u_path)))));
      return 0;
    }
    if (*star_cmd) {
      emit(ybg::to_json(ybg::star(ybg::six_vertex_from_json(maybe_inline(u_path)))));
      return 0;
    }
    if (*delta_cmd) {
      auto [del, del_star] = ybg::delta_pair(ybg::six_vertex_from_json(maybe_inline(u_path)));
      emit(json{{"delta", ybg::to_json(del)}, {"delta_star", ybg::to_json(del_star)}});
      return 0;
    }
    if (*solve_cmd) {
      ybg::SixVertexMatrix u = ybg::six_vertex_from_json(maybe_inline(u_path));
      ybg::SixVertexMatrix v = ybg::six_vertex_from_json(maybe_inline(v_path));
      if (oracle) {
        ybg::BruteForceResult r = ybg::brute_force_w(u, v);
        json out{{"nullity", r.nullity}};
        out["kind"] = r.is_ray() ? "ray" : r.is_absent() ? "absent" : "multi_dimensional";
        if (r.ray) out["w"] = ybg::to_json(*r.ray);
        emit(out);
        return r.is_ray() ? 0 : 1;
      }
      emit(ybg::to_json(ybg::solve_w(u, v)));
      return 0;
    }
    if (*compose_cmd) {
      ybg::GroupoidElement u = ybg::element_from_json(maybe_inline(u_path));
      ybg::GroupoidElement v = ybg::element_from_json(maybe_inline(v_path));
      emit(ybg::to_json(ybg::compose(u, v)));
      return 0;
    }
    if (*sample_cmd) {
      ybg::ObjectLabel d = ybg::object_label_from_json(maybe_inline(d_arg));
      ybg::FiberSide fs = side == "source" ? ybg::FiberSide::Source : ybg::FiberSide::Target;
      emit(ybg::to_json(ybg::sample_fiber(d, fs, seed)));
      return 0;
    }
    if (*idem_cmd) {
      emit(ybg::to_json(ybg::idempotent(ybg::object_label_from_json(maybe_inline(d_arg)))));
      return 0;
    }
    if (*verify_cmd) {
      ybg::verify::SuiteReport rep = ybg::verify::run_suite(suite, samples, seed);
      emit(ybg::verify::to_json(rep));
      return rep.all_pass() ? 0 : 1;
    }
    if (*build_cmd) {
      emit(ybg::to_json(ybg::model_from_json(read_json(input_path))));
      return 0;
    }
    if (*check_cmd) {
      ybg::Report rep = ybg::check_solvability(ybg::model_from_json(read_json(model_path)));
      emit(ybg::to_json(rep));
      return rep.all_pass() ? 0 : 1;
    }
    if (*partition_cmd) {
      ybg::LatticeModel m = ybg::model_from_json(read_json(model_path));
      ybg::BoundaryAssignment bc = ybg::boundary_from_json(read_json(bc_path));
      json out;
      bool equal = true;
      if (method == "enumerate" || method == "both")
        out["enumerate"] = ybg::to_json(ybg::partition_enumerate(m, bc));
      if (method == "transfer" || method == "both")
        out["transfer"] = ybg::to_json(ybg::partition_transfer(m, bc));
      if (method == "both") {
        equal = out["enumerate"] == out["transfer"];
        out["equal"] = equal;
      }
      emit(out);
      return equal ? 0 : 1;
    }
    if (*commute_cmd) {
      ybg::LatticeModel m = ybg::model_from_json(read_json(model_path));
      json out = json::array();
      bool ok = true;
      for (const ybg::CommuteCheck& c : ybg::transfer_commutation(m)) {
        out.push_back(json{{"rows", json::array({c.row, c.row + 1})},
                           {"rho_defined", c.rho_defined},
                           {"rho_invertible", c.rho_invertible},
                           {"commute", c.commute}});
        if (c.rho_invertible && !c.commute) ok = false;
      }
      emit(json{{"pairs", std::move(out)}, {"all_pass", ok}});
      return ok ? 0 : 1;
    }
    if (*convert_cmd) {
      json j = maybe_inline(u_path);
      if (to_kind == "fv") {
        ybg::NfElement e = ybg::nf_from_json(j);
        if (ybg::classify(e.matrix).tag != ybg::RegionTag::OmegaLowB)
          ybg::fail(ybg::Errc::NotBoundary, "only Omega_b elements identify with Phi_b");
        emit(ybg::to_json(ybg::fv_boundary(e.matrix, e.d1)));
      } else {
        ybg::FvElement e = ybg::fv_from_json(j);
        if (!ybg::in_phi_b(e.matrix))
          ybg::fail(ybg::Errc::NotBoundary, "only Phi_b elements identify with Omega_b");
        if (d2_arg.empty())
          ybg::fail(ybg::Errc::ParseError, "fv -> nf needs --d2 (the fv label has no d2)");
        emit(ybg::to_json(ybg::boundary_element(
            e.matrix, e.eps, ybg::Scalar(ybg::rational_from_string(d2_arg)))));
      }
      return 0;
    }
  } catch (const ybg::Error& e) {
    if (e.code() == ybg::Errc::ParseError) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    return emit_domain_error(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
