#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bvc/control.hpp"
#include "bvc/exact.hpp"
#include "bvc/oracles.hpp"

// Polynomial-time transformations from dominating set, (restricted) hitting
// set and exact cover by 3-sets to control instances, plus tooling to check
// them against the source oracles.

namespace bvc {

struct CandidateGroup {
  std::string name;
  std::vector<CandidateId> members;  // ascending
};

// A run of consecutive voters produced by one row of a construction. `index`
// is the 0-based element the row was instantiated for (b_i, S_i, ...).
struct VoterGroup {
  int row = 0;
  std::optional<std::size_t> index;
  std::size_t first = 0;
  std::size_t count = 0;
};

struct ConstructionMeta {
  std::string family;
  std::vector<std::string> candidate_names;
  std::vector<CandidateGroup> groups;     // a partition of the universe
  std::vector<CandidateGroup> subgroups;  // indexed blocks such as X_3
  std::vector<VoterGroup> voter_groups;   // registered voters
  std::vector<VoterGroup> pool_groups;    // unregistered voters
  std::map<std::string, long> parameters;

  const CandidateGroup& group(std::string_view name) const;  // searches both lists
  CandidateId candidate(std::string_view name) const;
  // Voters of one row, optionally only the instance for element `index`.
  std::vector<VoterIndex> voters(int row, std::optional<std::size_t> index = std::nullopt) const;
  std::vector<VoterIndex> pool_voters(int row, std::optional<std::size_t> index = std::nullopt) const;
};

struct Reduction {
  ControlInstance instance;
  ConstructionMeta meta;
};

// Dominating set (G, k) sources.
Reduction ds_to_bv_delete_candidates(const Graph& g, std::size_t k, Direction dir);
Reduction ds_to_bv_add_candidates(const Graph& g, std::size_t k, Direction dir, bool limited);
Reduction ds_to_bv_add_voters(const Graph& g, std::size_t k);
Reduction ds_to_bv_delete_voters(const Graph& g, std::size_t k);
Reduction ds_to_bv_destructive_voter_partition(const Graph& g, std::size_t k);

struct PartitionVariant {
  bool runoff = false;
  TieRule tie = TieRule::TE;
  Direction direction = Direction::Constructive;
  std::string code() const;
  static std::vector<PartitionVariant> all();
};

// Restricted hitting set sources (n > m > k > 1).
Reduction rhs_to_bv_candidate_partition(const SetSystem& s, std::size_t k, PartitionVariant v);
Reduction rhs_to_fv_destructive_voter_partition(const SetSystem& s, std::size_t k);
// Exact cover by 3-sets source.
Reduction x3c_to_bv_voter_partition(const SetSystem& s, TieRule tie);

struct HsToRhs {
  std::optional<SetSystem> sets;  // absent when answered directly
  std::size_t k = 0;
  std::optional<bool> direct_answer;
};
HsToRhs hs_to_rhs(const SetSystem& s, std::size_t k);

// The control action a source solution maps to: dominating set -> vertex ids,
// hitting set -> element ids, exact cover -> set indices.
Witness forward_witness(const Reduction& r, const std::vector<std::uint32_t>& source_solution);

enum class Family {
  DsCcdc,
  DsDcdc,
  DsCcac,
  DsDcac,
  DsCcauc,
  DsDcauc,
  DsCcav,
  DsCcdv,
  DsDcpvTe,
  RhsPartition,
  X3cPv,
  RhsFvDcpvTp,
  HsToRhs,
};

std::string family_id(Family f);
Family parse_family(std::string_view id);  // ArgumentError on unknown ids
std::vector<Family> all_families();
bool is_graph_family(Family f);

// Whether (n, k) lies inside the domain of a dominating set family.
bool ds_domain(Family f, std::size_t n, std::size_t k);
Reduction build_ds(Family f, const Graph& g, std::size_t k);

struct VerifyReport {
  std::string family;
  std::string variant;
  bool source_yes = false;
  std::optional<bool> target_yes;  // absent when only partially checked
  bool agree = false;
  bool partial = false;
  bool direct = false;  // answered without building a target instance
  std::optional<bool> forward_ok;  // the mapped source witness replays correctly
  std::uint64_t nodes = 0;
  std::string note;
};

VerifyReport verify_ds(Family f, const Graph& g, std::size_t k, const SolverCaps& caps = {});
VerifyReport verify_rhs_partition(const SetSystem& s, std::size_t k, PartitionVariant v,
                                  const SolverCaps& caps = {});
VerifyReport verify_x3c(const SetSystem& s, TieRule tie, const SolverCaps& caps = {});
// Only the forward direction is checked; the report is marked partial.
VerifyReport verify_rhs_fallback(const SetSystem& s, std::size_t k);
VerifyReport verify_hs_to_rhs(const SetSystem& s, std::size_t k);

// Checks over voter bipartitions (V1, V2) that the distinguished candidate wins
// at least one of (C, V1), (C, V2); `unique` demands a unique win. Without
// `samples` every bipartition is visited, otherwise V1 is drawn at random
// with a per-sample inclusion probability.
struct SubelectionAudit {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
};
SubelectionAudit audit_subelections(const Reduction& r, bool unique, std::optional<std::uint64_t> samples,
                                    std::uint64_t seed = 1, const SolverCaps& caps = {});

}  // namespace bvc
