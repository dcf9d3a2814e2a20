#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paintbucket/solver.hpp"

namespace paintbucket {

struct CaseResult {
  std::string label;
  bool passed;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  std::chrono::milliseconds elapsed{0};

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Bounds for the property suites. Negative values select each suite's
/// default (listed next to the suite functions below).
struct VerifyOptions {
  int max = -1;
  int cells = -1;
  int sets = -1;
  int count = -1;
  std::uint64_t seed = 1;
  SolveOptions solve = isomorphism_options();
};

std::span<const std::string_view> suite_names();

/// Dispatches on `suite`; throws std::invalid_argument for unknown names.
SuiteReport run_suite(std::string_view suite, const VerifyOptions& opts);

/// K_{m,n} outcome table for 1 <= m, n <= max (default 4); one case per
/// (m, n), each checking both players to move.
SuiteReport verify_complete_suite(const VerifyOptions& opts);
/// Random claw graphs (count 200, at most `max` = 10 vertices, <= 6 leaves).
SuiteReport verify_claw_suite(const VerifyOptions& opts);
/// Random graphs with planted twins (count 200, base size `max` = 8).
SuiteReport verify_neighbors_suite(const VerifyOptions& opts);
/// Off-type moves lose, |C| <= cells (2), <= sets (2) avoider sets.
SuiteReport verify_shenanigans_suite(const VerifyOptions& opts);
/// u_i / v_i moves match the avoider / enforcer moves, |C| <= cells (3),
/// <= sets (2). Each built instance is also structurally audited.
SuiteReport verify_simulation_suite(const VerifyOptions& opts);
/// Winner correspondence, |C| <= cells (2), <= sets (2), K = |C|+2.
SuiteReport verify_proposition_suite(const VerifyOptions& opts);
/// Normalizations keep the avoider-enforcer winner, |C| <= cells (4),
/// <= sets (3).
SuiteReport verify_normalization_suite(const VerifyOptions& opts);
/// Every 2 x c grid coloring for 2 <= c <= max (3): the uncontracted and
/// contracted games have the same winner for both players to move.
SuiteReport verify_representation_suite(const VerifyOptions& opts);

}  // namespace paintbucket
