#include "bvc/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "bvc/errors.hpp"

namespace bvc {

SolverCaps SolverCaps::from_environment() {
  SolverCaps caps;
  if (const char* raw = std::getenv(kEnvVar)) {
    char* end = nullptr;
    unsigned long v = std::strtoul(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0 || v > 62)
      throw ArgumentError(std::string(kEnvVar) + " must be an integer in 1..62");
    caps.exponent_cap = static_cast<unsigned>(v);
  }
  return caps;
}

std::uint64_t bounded_subset_count(std::size_t n, std::size_t k) {
  constexpr std::uint64_t kSat = std::uint64_t{1} << 63;
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, j)
  for (std::size_t j = 0; j <= std::min(n, k); ++j) {
    total += binom;
    if (total >= kSat) return kSat;
    // C(n, j+1) = C(n, j) * (n - j) / (j + 1), exact in 128 bits
    unsigned __int128 next = static_cast<unsigned __int128>(binom) * (n - j) / (j + 1);
    binom = next >= kSat ? kSat : static_cast<std::uint64_t>(next);
  }
  return total;
}

void for_each_subset(std::size_t n, std::size_t max_size,
                     const std::function<bool(std::span<const std::uint32_t>)>& visit) {
  std::vector<std::uint32_t> idx;
  for (std::size_t size = 0; size <= std::min(n, max_size); ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = static_cast<std::uint32_t>(i);
    while (true) {
      if (visit(idx)) return;
      // advance to the next combination in lexicographic order
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

namespace {

void check_capacity(std::uint64_t actions, const SolverCaps& caps, const std::string& what) {
  if (caps.exponent_cap < 63 && actions > (std::uint64_t{1} << caps.exponent_cap))
    throw CapacityError(what + ": " + std::to_string(actions) + " actions exceed the cap 2^" +
                        std::to_string(caps.exponent_cap));
}

std::size_t budget_of(const ControlInstance& inst, std::size_t pool) {
  return inst.budget ? std::min(*inst.budget, pool) : pool;
}

SolveResult search(const ControlInstance& inst, std::size_t n, std::size_t max_size,
                   const SolverCaps& caps, WitnessKind kind,
                   const std::function<std::vector<std::uint32_t>(std::span<const std::uint32_t>)>& members,
                   const std::function<WinnerReport(std::span<const std::uint32_t>)>& outcome) {
  check_capacity(bounded_subset_count(n, max_size), caps, inst.type.code());
  SolveResult res;
  for_each_subset(n, max_size, [&](std::span<const std::uint32_t> pick) {
    ++res.nodes_explored;
    if (goal_met(outcome(pick), inst.distinguished, inst.type.direction)) {
      auto m = members(pick);
      std::sort(m.begin(), m.end());
      res.yes = true;
      res.witness = Witness{kind, std::move(m)};
      return true;
    }
    return false;
  });
  return res;
}

std::vector<std::uint32_t> mapped(std::span<const std::uint32_t> pick,
                                  const std::vector<std::uint32_t>& items) {
  std::vector<std::uint32_t> out;
  out.reserve(pick.size());
  for (auto i : pick) out.push_back(items[i]);
  return out;
}

}  // namespace

SolveResult solve_add_candidates(const ControlInstance& inst, const SolverCaps& caps) {
  inst.validate();
  ControlEvaluator ev(inst);
  auto pool = inst.spoilers().members();
  std::size_t limit = inst.type.action == ControlAction::AddCandidatesUnlimited
                          ? pool.size()
                          : budget_of(inst, pool.size());
  return search(
      inst, pool.size(), limit, caps, WitnessKind::AddedCandidates,
      [&](auto pick) { return mapped(pick, pool); },
      [&](auto pick) {
        CandidateSet active = inst.qualified;
        for (auto i : pick) active.insert(pool[i]);
        return ev.with_candidates(active);
      });
}

SolveResult solve_delete_candidates(const ControlInstance& inst, const SolverCaps& caps) {
  inst.validate();
  ControlEvaluator ev(inst);
  // The distinguished candidate is never deleted: the destructive problem
  // forbids it and it cannot help the constructive one.
  CandidateSet deletable = inst.qualified;
  deletable.erase(inst.distinguished);
  auto items = deletable.members();
  return search(
      inst, items.size(), budget_of(inst, items.size()), caps, WitnessKind::DeletedCandidates,
      [&](auto pick) { return mapped(pick, items); },
      [&](auto pick) {
        CandidateSet active = inst.qualified;
        for (auto i : pick) active.erase(items[i]);
        return ev.with_candidates(active);
      });
}

SolveResult solve_add_voters(const ControlInstance& inst, const SolverCaps& caps) {
  inst.validate();
  ControlEvaluator ev(inst);
  const std::size_t n = ev.registered();
  std::vector<VoterIndex> voters;
  return search(
      inst, inst.pool.size(), budget_of(inst, inst.pool.size()), caps, WitnessKind::AddedVoters,
      [&](auto pick) { return std::vector<std::uint32_t>(pick.begin(), pick.end()); },
      [&](auto pick) {
        voters.resize(n);
        for (std::size_t v = 0; v < n; ++v) voters[v] = static_cast<VoterIndex>(v);
        for (auto i : pick) voters.push_back(static_cast<VoterIndex>(n + i));
        return ev.with_voters(voters);
      });
}

SolveResult solve_delete_voters(const ControlInstance& inst, const SolverCaps& caps) {
  inst.validate();
  ControlEvaluator ev(inst);
  const std::size_t n = ev.registered();
  std::vector<VoterIndex> voters;
  return search(
      inst, n, budget_of(inst, n), caps, WitnessKind::DeletedVoters,
      [&](auto pick) { return std::vector<std::uint32_t>(pick.begin(), pick.end()); },
      [&](auto pick) {
        voters.clear();
        std::size_t j = 0;
        for (VoterIndex v = 0; v < n; ++v) {
          if (j < pick.size() && pick[j] == v)
            ++j;
          else
            voters.push_back(v);
        }
        return ev.with_voters(voters);
      });
}

SolveResult solve_candidate_partition(const ControlInstance& inst, const SolverCaps& caps) {
  inst.validate();
  if (!inst.type.tie) throw ArgumentError("partition control needs a tie rule");
  ControlEvaluator ev(inst);
  const bool runoff = inst.type.action == ControlAction::RunoffPartitionCandidates;
  auto items = inst.qualified.members();
  const std::size_t m = inst.election.candidate_count();
  // With a run-off both halves are treated alike, so the first candidate can
  // be pinned to C1. Without one the halves play different roles.
  std::vector<std::uint32_t> free_items = items;
  std::vector<std::uint32_t> pinned;
  if (runoff && !free_items.empty()) {
    pinned.push_back(free_items.front());
    free_items.erase(free_items.begin());
  }
  return search(
      inst, free_items.size(), free_items.size(), caps, WitnessKind::CandidateBipartition,
      [&](auto pick) {
        auto out = mapped(pick, free_items);
        out.insert(out.end(), pinned.begin(), pinned.end());
        return out;
      },
      [&](auto pick) {
        CandidateSet c1(m);
        for (auto c : pinned) c1.insert(c);
        for (auto i : pick) c1.insert(free_items[i]);
        return ev.candidate_partition(c1, runoff, *inst.type.tie);
      });
}

SolveResult solve_voter_partition(const ControlInstance& inst, const SolverCaps& caps) {
  inst.validate();
  if (!inst.type.tie) throw ArgumentError("partition control needs a tie rule");
  ControlEvaluator ev(inst);
  const std::size_t n = ev.registered();
  if (n == 0) {
    // The only bipartition is (empty, empty).
    SolveResult res;
    res.nodes_explored = 1;
    auto r = ev.voter_partition({}, {}, *inst.type.tie);
    if (goal_met(r, inst.distinguished, inst.type.direction)) {
      res.yes = true;
      res.witness = Witness{WitnessKind::VoterBipartition, {}};
    }
    return res;
  }
  std::vector<VoterIndex> v1, v2;
  const std::size_t free_count = n - 1;  // voter 0 always sits in V1
  return search(
      inst, free_count, free_count, caps, WitnessKind::VoterBipartition,
      [&](auto pick) {
        std::vector<std::uint32_t> out{0};
        for (auto i : pick) out.push_back(i + 1);
        return out;
      },
      [&](auto pick) {
        v1.assign(1, 0);
        v2.clear();
        std::size_t j = 0;
        for (VoterIndex v = 1; v < n; ++v) {
          if (j < pick.size() && pick[j] + 1 == v) {
            v1.push_back(v);
            ++j;
          } else {
            v2.push_back(v);
          }
        }
        return ev.voter_partition(v1, v2, *inst.type.tie);
      });
}

SolveResult solve(const ControlInstance& inst, const SolverCaps& caps) {
  switch (inst.type.action) {
    case ControlAction::AddCandidatesLimited:
    case ControlAction::AddCandidatesUnlimited:
      return solve_add_candidates(inst, caps);
    case ControlAction::DeleteCandidates:
      return solve_delete_candidates(inst, caps);
    case ControlAction::PartitionCandidates:
    case ControlAction::RunoffPartitionCandidates:
      return solve_candidate_partition(inst, caps);
    case ControlAction::AddVoters:
      return solve_add_voters(inst, caps);
    case ControlAction::DeleteVoters:
      return solve_delete_voters(inst, caps);
    case ControlAction::PartitionVoters:
      return solve_voter_partition(inst, caps);
  }
  throw ArgumentError("unknown control action");
}

}  // namespace bvc
