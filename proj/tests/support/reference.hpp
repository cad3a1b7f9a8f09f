#pragma once

// Straight-from-the-definition implementations used as test oracles. Nothing
// here calls into the engine, the solvers or the kernels.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "bvc/control.hpp"
#include "bvc/oracles.hpp"

namespace ref {

using Vote = std::vector<std::uint32_t>;  // approved candidates, best first
using Set = std::vector<bool>;            // indexed by candidate id

struct Outcome {
  std::vector<std::uint32_t> winners;  // ascending
  bvc::WinnerMode mode = bvc::WinnerMode::NoWinner;
  std::size_t level = 0;
  std::size_t score = 0;
  bool unique(std::uint32_t c) const { return winners.size() == 1 && winners[0] == c; }
  bool has(std::uint32_t c) const;
};

std::vector<Vote> votes_of(const bvc::Election& e);

std::size_t level_score(const std::vector<Vote>& votes, std::uint32_t c, std::size_t level);
std::size_t approvals(const std::vector<Vote>& votes, std::uint32_t c);

Outcome winners(const std::vector<Vote>& votes, const Set& active);
// Same, with `active` a bitmask over candidate ids < 64.
Outcome winners(const std::vector<Vote>& votes, std::uint64_t active);
Outcome winners(const bvc::Election& e);

// Two-stage elections. Survivors of a stage with no candidates or no voters
// are empty.
Outcome candidate_partition(const std::vector<Vote>& votes, std::uint64_t c1, std::uint64_t c2, bool runoff,
                            bvc::TieRule tie);
Outcome voter_partition(const std::vector<Vote>& votes, std::uint64_t all, std::uint64_t v1_mask,
                        bvc::TieRule tie);

// Exhaustive decision; at most 24 items per enumerated side.
bool solve(const bvc::ControlInstance& inst);
// Outcome of applying a witness, computed from scratch.
Outcome replay(const bvc::ControlInstance& inst, const bvc::Witness& w);
bool goal(const Outcome& o, std::uint32_t c, bvc::Direction d);

bool dominating_set_exists(const bvc::Graph& g, std::size_t k);
bool hitting_set_exists(const bvc::SetSystem& s, std::size_t k);
bool exact_cover_exists(const bvc::SetSystem& s);

// Random votes: each voter ranks a random prefix of a random permutation.
// With full = true every candidate is ranked.
bvc::Election random_election(std::size_t m, std::size_t n, std::mt19937_64& rng, bool full = false);
std::vector<bvc::FallbackVote> random_votes(std::size_t m, std::size_t n, std::mt19937_64& rng, bool full = false);

}  // namespace ref
