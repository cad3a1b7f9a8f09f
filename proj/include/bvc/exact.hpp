#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "bvc/control.hpp"

namespace bvc {

// Exhaustive searches refuse to run when the number of actions to examine
// exceeds 2^exponent_cap.
struct SolverCaps {
  unsigned exponent_cap = 24;

  static constexpr const char* kEnvVar = "BVC_EXPONENT_CAP";
  // Reads kEnvVar when set; falls back to the default.
  static SolverCaps from_environment();
};

struct SolveResult {
  bool yes = false;
  std::optional<Witness> witness;
  std::uint64_t nodes_explored = 0;  // actions evaluated
};

// Dispatches on inst.type.action. Actions are tried in size-lexicographic
// order, so the first witness is the smallest one in that order.
SolveResult solve(const ControlInstance& inst, const SolverCaps& caps = {});

SolveResult solve_add_candidates(const ControlInstance& inst, const SolverCaps& caps = {});
SolveResult solve_delete_candidates(const ControlInstance& inst, const SolverCaps& caps = {});
SolveResult solve_add_voters(const ControlInstance& inst, const SolverCaps& caps = {});
SolveResult solve_delete_voters(const ControlInstance& inst, const SolverCaps& caps = {});
SolveResult solve_candidate_partition(const ControlInstance& inst, const SolverCaps& caps = {});
SolveResult solve_voter_partition(const ControlInstance& inst, const SolverCaps& caps = {});

// Number of subsets of an n-set with at most k elements, saturating at 2^63.
std::uint64_t bounded_subset_count(std::size_t n, std::size_t k);

// Visits every subset of {0..n-1} with at most max_size elements, by size and
// then lexicographically. The visitor returns true to stop early.
void for_each_subset(std::size_t n, std::size_t max_size,
                     const std::function<bool(std::span<const std::uint32_t>)>& visit);

}  // namespace bvc
