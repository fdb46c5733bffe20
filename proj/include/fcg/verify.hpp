#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcg/fourterm.hpp"

namespace fcg {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  /// Offending graph or combination in the JSON graph format.
  std::optional<nlohmann::json> counterexample;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  int max_n = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct VerifyConfig {
  int max_n = 4;
  std::uint64_t seed = 1;
  int workers = 1;
};

// Individual checks. Each runs over every grading 0..max_n (or the stated
// range) and stops at the first counterexample.

CheckResult check_psi_iota(int max_n);
CheckResult check_psi_kills_ic(int max_n);
CheckResult check_rnf_kills_ic(int max_n);
CheckResult check_psi_coalgebra_map(int max_n);
CheckResult check_red_basis_dimension(int max_n);

CheckResult check_pi_jr_formula(int max_n);
CheckResult check_pi_jr_idempotent(int max_n);
CheckResult check_pi_jr_kills_products(int max_n, std::uint64_t seed, int samples);
CheckResult check_pi_jr_primitive(int max_n);

CheckResult check_coassociativity(int max_n);
CheckResult check_counit(int max_n);
CheckResult check_cocommutativity(int max_n);
CheckResult check_multiplicativity(int max_n, std::uint64_t seed, int samples);

CheckResult check_fourterm_ranks(int max_n, int workers);
CheckResult check_fc_biideal(int max_n, int workers);

CheckResult check_w_vanishing(int max_n, int workers);
CheckResult check_w_nabla(int max_piece);
CheckResult check_w_leaf(int max_n);
CheckResult check_chromatic_vanishing(int max_n, int workers);
CheckResult check_chromatic_order(int max_n);
CheckResult check_chromatic_multiplicative(int max_n);
/// Trees on n−1 framing-0 vertices joined to one framing-1 vertex, 2 ≤ n.
CheckResult check_tree_on_framed_vertex(int max_n);

CheckResult check_leaf_identity(int max_n, LandoWorkspace& ws);
CheckResult check_forest(int max_n, LandoWorkspace& ws);
CheckResult check_primitive_methods(int max_n, LandoWorkspace& ws);
CheckResult check_milnor_moore(int max_n, LandoWorkspace& ws);
CheckResult check_direct_sum(int max_n, LandoWorkspace& ws);
CheckResult check_unframed_oracle(int max_n, LandoWorkspace& ws);

/// Four connected red graphs supported on P4 or C4, independent modulo
/// F_C ∩ (connected span) and with pairwise distinct (chromatic, W).
struct PrimitiveWitness {
  std::vector<CanonicalKey> graphs;
  std::vector<std::string> chromatic;
  std::vector<Scalar> w;
  int rank = 0;
};
std::optional<PrimitiveWitness> pn4_witness(LandoWorkspace& ws);
CheckResult check_pn4_witness(LandoWorkspace& ws);
/// Moves the grading-4 witnesses up by framing-0 leaf attachment and checks
/// they stay independent in PN_n for 5 ≤ n ≤ max_n.
CheckResult check_pn_tree_action(int max_n, LandoWorkspace& ws);

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& suite, const VerifyConfig& config);

nlohmann::json report_to_json(const SuiteReport& r, bool timings);
std::string report_to_text(const SuiteReport& r, bool timings);
std::string report_to_csv(const SuiteReport& r, bool timings);

}  // namespace fcg
