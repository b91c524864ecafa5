#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ybg/json_io.hpp"

namespace ybg::verify {

struct Check {
  std::string name;
  bool pass = false;
  int samples = 0;  // 0 when the check is a fixed worked identity
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool all_pass() const;
};

// Seeded property checks. Each one returns pass/fail with a witness naming
// the first failing instance; they are shared by the CLI verify command and
// the acceptance suite.
Check cf_parametrized_ybe(int samples, std::uint64_t seed);
Check ff_parametrized_ybe(int samples, std::uint64_t seed);
Check solver_oracle_agreement(int samples, std::uint64_t seed);
Check worked_solution();
Check six_commutator_variants(int samples, std::uint64_t seed);
Check solution_weight_identities(int samples, std::uint64_t seed);
std::pair<Check, Check> nf_axioms_and_transport(int samples, std::uint64_t seed);
Check nf_star_structure(int samples, std::uint64_t seed);
Check ff_group_homomorphism(int samples, std::uint64_t seed);
Check five_vertex_groupoid(int samples, std::uint64_t seed);
Check lattice_solvable_models(std::uint64_t seed);
Check lattice_generality(std::uint64_t seed);

// Additional per-module invariants beyond the numbered criteria.
Check star_delta_invariants(int samples, std::uint64_t seed);
Check boundary_solution_regions(int samples, std::uint64_t seed);
Check ff_family_properties(int samples, std::uint64_t seed);

// suite is one of core | ff | nf | fv | lattice | all.
SuiteReport run_suite(const std::string& suite, int samples, std::uint64_t seed);

json to_json(const SuiteReport& r);

}  // namespace ybg::verify
