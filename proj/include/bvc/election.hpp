#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bvc/candidate_set.hpp"
#include "bvc/kernels.hpp"

namespace bvc {

// A voter's approved candidates, best first. Candidates outside the list are
// disapproved. A Bucklin vote is the special case that lists every candidate.
class FallbackVote {
 public:
  FallbackVote() = default;
  explicit FallbackVote(std::vector<CandidateId> approved);

  std::span<const CandidateId> approved() const { return approved_; }
  std::size_t length() const { return approved_.size(); }
  // 0-based position inside the approved list.
  std::optional<std::size_t> position_of(CandidateId c) const;
  bool approves(CandidateId c) const { return position_of(c).has_value(); }

  bool operator==(const FallbackVote&) const = default;

 private:
  std::vector<CandidateId> approved_;
};

class Election {
 public:
  Election() = default;
  // Throws ArgumentError when a vote names an id >= candidate_count.
  Election(std::size_t candidate_count, std::vector<FallbackVote> votes);

  std::size_t candidate_count() const { return candidate_count_; }
  std::size_t voter_count() const { return votes_.size(); }
  std::span<const FallbackVote> votes() const { return votes_; }
  const FallbackVote& vote(std::size_t i) const { return votes_[i]; }

  // Every vote ranks all candidates.
  bool is_bucklin() const;

  bool operator==(const Election&) const = default;

 private:
  std::size_t candidate_count_ = 0;
  std::vector<FallbackVote> votes_;
};

enum class WinnerMode { MajorityLevel, ApprovalFallback, NoWinner };

struct WinnerReport {
  std::vector<CandidateId> winners;  // ascending
  WinnerMode mode = WinnerMode::NoWinner;
  std::size_t level = 0;  // only meaningful for MajorityLevel
  std::size_t score = 0;

  bool is_unique_winner(CandidateId c) const { return winners.size() == 1 && winners[0] == c; }
  bool is_winner(CandidateId c) const;
  bool operator==(const WinnerReport&) const = default;
};

// floor(n/2) + 1
inline std::size_t majority_threshold(std::size_t voters) { return voters / 2 + 1; }

// Votes listing c among their first min(level, |approved|) entries.
std::size_t level_score(const Election& e, CandidateId c, std::size_t level);
std::size_t approval_score(const Election& e, CandidateId c);
// majority_threshold - level_score; positive means c is short of a majority.
long deficit(const Election& e, CandidateId c, std::size_t level);

WinnerReport fallback_winners(const Election& e);
// Same rule, but throws PreconditionError unless every vote is a full ranking.
WinnerReport bucklin_winners(const Election& e);

struct Restriction {
  Election election;
  std::vector<CandidateId> original_ids;  // new id -> old id
};

// Drops every candidate outside `keep` from every vote and renumbers the rest
// in ascending id order.
Restriction restrict_candidates(const Election& e, const CandidateSet& keep);

// Dense rank matrix of an election, stored both candidate-major and
// voter-major so level tallies run through the vector kernels.
class ScoreMatrix {
 public:
  explicit ScoreMatrix(const Election& e);

  std::size_t candidate_count() const { return candidates_; }
  std::size_t voter_count() const { return voters_; }

  std::size_t level_score(CandidateId c, std::size_t level) const;
  std::size_t approval_score(CandidateId c) const;
  std::vector<std::int32_t> level_scores(std::size_t level) const;
  std::size_t max_length() const { return max_length_; }

  WinnerReport winners() const;

 private:
  std::span<const kernels::Rank> column(CandidateId c) const;
  std::span<const kernels::Rank> row(std::size_t v) const;

  std::size_t candidates_ = 0;
  std::size_t voters_ = 0;
  std::size_t max_length_ = 0;
  std::vector<kernels::Rank> by_candidate_;
  std::vector<kernels::Rank> by_voter_;
};

}  // namespace bvc
