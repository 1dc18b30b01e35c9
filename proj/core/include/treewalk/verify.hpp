#pragma once

// Cross-method verification harness: recurrence vs generating functions vs
// brute-force oracles, plus the algebraic identities the series must satisfy.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treewalk/oracles.hpp"
#include "treewalk/recurrence.hpp"

namespace treewalk {

enum class VerifyScope { tree, dyck, freegroup, all };

std::optional<VerifyScope> parse_scope(std::string_view text);

struct VerifyOptions {
  VerifyScope scope = VerifyScope::all;
  std::uint32_t n_max = 10;
  std::uint32_t m_max = 4;
  std::uint64_t max_states = default_max_states;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string counterexample;  ///< first failure, empty on success
};

/// Tree specializations m = 2, 3, 4 plus (1,1,1), (2,1,5), (1,1/2,2).
std::vector<WeightConfig> verification_weights();

/// Runs every check in scope. Throws feasibility (before running anything)
/// when an oracle would exceed opts.max_states.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace treewalk
