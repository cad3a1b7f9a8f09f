#pragma once

#include <span>
#include <vector>

#include "bvc/control.hpp"
#include "bvc/exact.hpp"

// Polynomial-time destructive control by adding voters (dcav) and by deleting
// voters (dcdv) under fallback voting.
//
// c is not the unique winner of (C, W) exactly when either
//   - some rival d and level i satisfy
//       score_i(d) >= maj(W), score_i(d) >= score_i(c), score_{i-1}(c) < maj(W),
//   - or approval(c) < maj(W) and some rival d has approval(d) >= approval(c).
// Every condition only looks at c, d, the level and |W|, so each
// (level, rival) pair is decided by counting how many voters of each kind
// (relative to c, d and i) to add or delete. Levels are tried in increasing
// order, then the approval stage; the first feasible pair yields the witness.

namespace bvc {

enum class StageKind { Initial, Majority, Approval };

enum class Check {
  None,              // feasible
  TieOrBeat,         // the rival does not reach c's score
  RivalMajority,     // the rival has no strict majority at this level
  NoEarlierMajority, // c already holds a majority one level earlier
  ApprovalBelowMajority,
  ApprovalCatchUp,
};

struct StageRecord {
  StageKind kind = StageKind::Initial;
  std::size_t level = 0;  // majority stages only
  CandidateId rival = 0;
  Check blocking = Check::None;  // at the largest voter count tried
  bool success = false;
};

struct StageTrace {
  std::vector<StageRecord> records;
};

struct PolyResult {
  SolveResult result;  // nodes_explored counts (stage, rival) checks
  StageTrace trace;
};

PolyResult dcav_fallback(const Election& registered, std::span<const FallbackVote> pool,
                         CandidateId c, std::size_t budget);
PolyResult dcdv_fallback(const Election& registered, CandidateId c, std::size_t budget);

// Accepts dcav and dcdv instances; throws ArgumentError for anything else.
PolyResult solve_poly(const ControlInstance& inst);

}  // namespace bvc
