#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bvc/election.hpp"
#include "bvc/winner_engine.hpp"

namespace bvc {

// TE: only a unique sub-election winner moves on. TP: every winner moves on.
enum class TieRule { TE, TP };
enum class Direction { Constructive, Destructive };

enum class ControlAction {
  AddCandidatesLimited,
  AddCandidatesUnlimited,
  DeleteCandidates,
  PartitionCandidates,
  RunoffPartitionCandidates,
  AddVoters,
  DeleteVoters,
  PartitionVoters,
};

struct ControlType {
  ControlAction action = ControlAction::AddCandidatesLimited;
  Direction direction = Direction::Constructive;
  std::optional<TieRule> tie;  // partitions only

  // Lowercase code such as "ccac", "dcrpc-tp", "ccpv-te".
  std::string code() const;
  // Throws ArgumentError on unknown codes.
  static ControlType parse(std::string_view code);
  // The 22 problems in a fixed order.
  static std::vector<ControlType> all();

  bool has_budget() const;
  bool is_partition() const;
  bool operator==(const ControlType&) const = default;
};

struct ControlInstance {
  ControlType type;
  // Universe C u D. The votes are the registered voters.
  Election election;
  // C; the remaining candidates form the spoiler pool D.
  CandidateSet qualified;
  CandidateId distinguished = 0;
  std::optional<std::size_t> budget;
  // Unregistered voters, over the same universe.
  std::vector<FallbackVote> pool;

  CandidateSet spoilers() const;
  // Throws ArgumentError on inconsistent instances.
  void validate() const;
};

enum class WitnessKind {
  AddedCandidates,
  DeletedCandidates,
  AddedVoters,
  DeletedVoters,
  CandidateBipartition,  // members: C1
  VoterBipartition,      // members: V1
};

struct Witness {
  WitnessKind kind = WitnessKind::AddedCandidates;
  std::vector<std::uint32_t> members;  // candidate ids or voter indices, ascending
  bool operator==(const Witness&) const = default;
};

WitnessKind witness_kind_for(ControlAction action);

// Constructive: c is the unique winner. Destructive: it is not.
bool goal_met(const WinnerReport& r, CandidateId c, Direction d);

// Two-stage elections over the full vote list of `e`. C2 = all - C1.
WinnerReport evaluate_candidate_partition(const Election& e, const CandidateSet& c1, bool runoff,
                                          TieRule tie);
// V2 = all - V1; sub-elections run on all candidates.
WinnerReport evaluate_voter_partition(const Election& e, std::span<const VoterIndex> v1,
                                      TieRule tie);

// Outcome of applying the witness to the instance.
WinnerReport replay(const ControlInstance& inst, const Witness& w);

// Engine-backed evaluation shared by the solvers. Voter indices address the
// registered voters first, then the pool.
class ControlEvaluator {
 public:
  explicit ControlEvaluator(const ControlInstance& inst);

  const ControlInstance& instance() const { return *inst_; }
  std::size_t registered() const { return registered_; }

  WinnerReport run(const CandidateSet& active, std::span<const VoterIndex> voters) const {
    return engine_.evaluate(active, voters);
  }
  WinnerReport with_candidates(const CandidateSet& active) const;
  WinnerReport with_voters(std::span<const VoterIndex> voters) const;
  WinnerReport candidate_partition(const CandidateSet& c1, bool runoff, TieRule tie) const;
  WinnerReport voter_partition(std::span<const VoterIndex> v1, std::span<const VoterIndex> v2,
                               TieRule tie) const;

  WinnerReport apply(const Witness& w) const;

 private:
  void survivors(const CandidateSet& part, std::span<const VoterIndex> voters, TieRule tie,
                 CandidateSet& out) const;

  const ControlInstance* inst_;
  std::size_t registered_;
  WinnerEngine engine_;
  std::vector<VoterIndex> registered_ids_;
};

}  // namespace bvc
