#include "bvc/control.hpp"

#include <algorithm>
#include <array>

#include "bvc/errors.hpp"

namespace bvc {

namespace {

struct ActionName {
  ControlAction action;
  std::string_view stem;
};

constexpr std::array<ActionName, 8> kStems{{
    {ControlAction::AddCandidatesLimited, "ac"},
    {ControlAction::AddCandidatesUnlimited, "auc"},
    {ControlAction::DeleteCandidates, "dc"},
    {ControlAction::PartitionCandidates, "pc"},
    {ControlAction::RunoffPartitionCandidates, "rpc"},
    {ControlAction::AddVoters, "av"},
    {ControlAction::DeleteVoters, "dv"},
    {ControlAction::PartitionVoters, "pv"},
}};

bool partition_action(ControlAction a) {
  return a == ControlAction::PartitionCandidates || a == ControlAction::RunoffPartitionCandidates ||
         a == ControlAction::PartitionVoters;
}

}  // namespace

std::string ControlType::code() const {
  std::string out = direction == Direction::Constructive ? "cc" : "dc";
  for (const auto& s : kStems)
    if (s.action == action) out += s.stem;
  if (tie) out += *tie == TieRule::TE ? "-te" : "-tp";
  return out;
}

ControlType ControlType::parse(std::string_view code) {
  for (const auto& t : all())
    if (t.code() == code) return t;
  throw ArgumentError("unknown control type '" + std::string(code) + "'");
}

std::vector<ControlType> ControlType::all() {
  std::vector<ControlType> out;
  for (const auto& s : kStems) {
    for (Direction d : {Direction::Constructive, Direction::Destructive}) {
      if (partition_action(s.action)) {
        out.push_back({s.action, d, TieRule::TE});
        out.push_back({s.action, d, TieRule::TP});
      } else {
        out.push_back({s.action, d, std::nullopt});
      }
    }
  }
  return out;
}

bool ControlType::has_budget() const {
  return action == ControlAction::AddCandidatesLimited || action == ControlAction::DeleteCandidates ||
         action == ControlAction::AddVoters || action == ControlAction::DeleteVoters;
}

bool ControlType::is_partition() const { return partition_action(action); }

CandidateSet ControlInstance::spoilers() const {
  return CandidateSet::full(election.candidate_count()) - qualified;
}

void ControlInstance::validate() const {
  const std::size_t m = election.candidate_count();
  if (qualified.universe() != m) throw ArgumentError("qualified set has the wrong universe");
  if (distinguished >= m || !qualified.contains(distinguished))
    throw ArgumentError("distinguished candidate must be a qualified candidate");
  if (type.has_budget() && !budget) throw ArgumentError(type.code() + " needs a budget");
  if (type.is_partition() != type.tie.has_value())
    throw ArgumentError("tie rule is only meaningful for partition control");
  bool adds = type.action == ControlAction::AddCandidatesLimited ||
              type.action == ControlAction::AddCandidatesUnlimited;
  if (!adds && !spoilers().empty()) throw ArgumentError(type.code() + " takes no spoiler candidates");
  if (type.action != ControlAction::AddVoters && !pool.empty())
    throw ArgumentError(type.code() + " takes no unregistered voters");
  for (const auto& v : pool)
    for (CandidateId c : v.approved())
      if (c >= m) throw ArgumentError("pool vote names unknown candidate");
}

WitnessKind witness_kind_for(ControlAction action) {
  switch (action) {
    case ControlAction::AddCandidatesLimited:
    case ControlAction::AddCandidatesUnlimited:
      return WitnessKind::AddedCandidates;
    case ControlAction::DeleteCandidates:
      return WitnessKind::DeletedCandidates;
    case ControlAction::PartitionCandidates:
    case ControlAction::RunoffPartitionCandidates:
      return WitnessKind::CandidateBipartition;
    case ControlAction::AddVoters:
      return WitnessKind::AddedVoters;
    case ControlAction::DeleteVoters:
      return WitnessKind::DeletedVoters;
    case ControlAction::PartitionVoters:
      return WitnessKind::VoterBipartition;
  }
  return WitnessKind::AddedCandidates;
}

bool goal_met(const WinnerReport& r, CandidateId c, Direction d) {
  bool unique = r.is_unique_winner(c);
  return d == Direction::Constructive ? unique : !unique;
}

ControlEvaluator::ControlEvaluator(const ControlInstance& inst)
    : inst_(&inst),
      registered_(inst.election.voter_count()),
      engine_([&] {
        std::vector<FallbackVote> all(inst.election.votes().begin(), inst.election.votes().end());
        all.insert(all.end(), inst.pool.begin(), inst.pool.end());
        return WinnerEngine(inst.election.candidate_count(), all);
      }()) {
  for (std::size_t v = 0; v < registered_; ++v) registered_ids_.push_back(static_cast<VoterIndex>(v));
}

WinnerReport ControlEvaluator::with_candidates(const CandidateSet& active) const {
  return engine_.evaluate(active, registered_ids_);
}

WinnerReport ControlEvaluator::with_voters(std::span<const VoterIndex> voters) const {
  return engine_.evaluate(inst_->qualified, voters);
}

void ControlEvaluator::survivors(const CandidateSet& part, std::span<const VoterIndex> voters,
                                 TieRule tie, CandidateSet& out) const {
  // An empty sub-election (no candidates, or no voters) sends nobody on.
  if (part.empty() || voters.empty()) return;
  WinnerReport r = engine_.evaluate(part, voters);
  if (tie == TieRule::TE && r.winners.size() != 1) return;
  for (CandidateId c : r.winners) out.insert(c);
}

WinnerReport ControlEvaluator::candidate_partition(const CandidateSet& c1, bool runoff,
                                                   TieRule tie) const {
  CandidateSet c2 = inst_->qualified - c1;
  CandidateSet final_round(inst_->election.candidate_count());
  survivors(c1, registered_ids_, tie, final_round);
  if (runoff)
    survivors(c2, registered_ids_, tie, final_round);
  else
    final_round |= c2;
  return engine_.evaluate(final_round, registered_ids_);
}

WinnerReport ControlEvaluator::voter_partition(std::span<const VoterIndex> v1,
                                               std::span<const VoterIndex> v2, TieRule tie) const {
  CandidateSet final_round(inst_->election.candidate_count());
  survivors(inst_->qualified, v1, tie, final_round);
  survivors(inst_->qualified, v2, tie, final_round);
  return engine_.evaluate(final_round, registered_ids_);
}

namespace {

void check_members(const Witness& w, std::size_t bound) {
  for (auto x : w.members)
    if (x >= bound) throw ArgumentError("witness member out of range");
}

}  // namespace

WinnerReport ControlEvaluator::apply(const Witness& w) const {
  const auto& inst = *inst_;
  const std::size_t m = inst.election.candidate_count();
  if (w.kind != witness_kind_for(inst.type.action))
    throw ArgumentError("witness kind does not match " + inst.type.code());
  switch (w.kind) {
    case WitnessKind::AddedCandidates: {
      check_members(w, m);
      CandidateSet active = inst.qualified;
      for (auto c : w.members) active.insert(c);
      return with_candidates(active);
    }
    case WitnessKind::DeletedCandidates: {
      check_members(w, m);
      CandidateSet active = inst.qualified;
      for (auto c : w.members) active.erase(c);
      return with_candidates(active);
    }
    case WitnessKind::CandidateBipartition: {
      check_members(w, m);
      return candidate_partition(CandidateSet::of(m, w.members),
                                 inst.type.action == ControlAction::RunoffPartitionCandidates,
                                 *inst.type.tie);
    }
    case WitnessKind::AddedVoters: {
      check_members(w, inst.pool.size());
      std::vector<VoterIndex> voters = registered_ids_;
      for (auto v : w.members) voters.push_back(static_cast<VoterIndex>(registered_ + v));
      return with_voters(voters);
    }
    case WitnessKind::DeletedVoters: {
      check_members(w, registered_);
      std::vector<bool> gone(registered_, false);
      for (auto v : w.members) gone[v] = true;
      std::vector<VoterIndex> voters;
      for (VoterIndex v = 0; v < registered_; ++v)
        if (!gone[v]) voters.push_back(v);
      return with_voters(voters);
    }
    case WitnessKind::VoterBipartition: {
      check_members(w, registered_);
      std::vector<bool> first(registered_, false);
      for (auto v : w.members) first[v] = true;
      std::vector<VoterIndex> v1, v2;
      for (VoterIndex v = 0; v < registered_; ++v) (first[v] ? v1 : v2).push_back(v);
      return voter_partition(v1, v2, *inst.type.tie);
    }
  }
  return {};
}

WinnerReport replay(const ControlInstance& inst, const Witness& w) {
  ControlEvaluator ev(inst);
  return ev.apply(w);
}

namespace {

ControlInstance partition_instance(const Election& e, ControlAction action, TieRule tie) {
  ControlInstance inst;
  inst.type = {action, Direction::Constructive, tie};
  inst.election = e;
  inst.qualified = CandidateSet::full(e.candidate_count());
  return inst;
}

}  // namespace

WinnerReport evaluate_candidate_partition(const Election& e, const CandidateSet& c1, bool runoff,
                                          TieRule tie) {
  if (!c1.is_subset_of(CandidateSet::full(e.candidate_count())))
    throw ArgumentError("C1 is not a subset of the candidates");
  auto inst = partition_instance(
      e, runoff ? ControlAction::RunoffPartitionCandidates : ControlAction::PartitionCandidates, tie);
  ControlEvaluator ev(inst);
  return ev.candidate_partition(c1, runoff, tie);
}

WinnerReport evaluate_voter_partition(const Election& e, std::span<const VoterIndex> v1,
                                      TieRule tie) {
  std::vector<bool> first(e.voter_count(), false);
  for (auto v : v1) {
    if (v >= e.voter_count()) throw ArgumentError("V1 names an unknown voter");
    first[v] = true;
  }
  std::vector<VoterIndex> a, b;
  for (VoterIndex v = 0; v < e.voter_count(); ++v) (first[v] ? a : b).push_back(v);
  auto inst = partition_instance(e, ControlAction::PartitionVoters, tie);
  ControlEvaluator ev(inst);
  return ev.voter_partition(a, b, tie);
}

}  // namespace bvc
