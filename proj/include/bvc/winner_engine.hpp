#pragma once

#include <span>
#include <vector>

#include "bvc/election.hpp"

namespace bvc {

// Repeated winner determination over sub-elections of one profile: a subset
// of the candidates and a subset of the votes. The profile is flattened once;
// each query walks votes level by level and stops at the first level where a
// candidate reaches a strict majority.
//
// Holds scratch buffers, so a single engine must not be shared across threads.
class WinnerEngine {
 public:
  explicit WinnerEngine(const Election& e);
  WinnerEngine(std::size_t candidate_count, std::span<const FallbackVote> votes);

  std::size_t candidate_count() const { return candidates_; }
  std::size_t voter_count() const { return offsets_.size() - 1; }

  WinnerReport evaluate(const CandidateSet& active, std::span<const VoterIndex> voters) const;
  WinnerReport evaluate(const CandidateSet& active) const;

  std::span<const VoterIndex> all_voters() const { return all_voters_; }

 private:
  static constexpr std::uint16_t kAbsent = 0xffff;

  void init(std::span<const FallbackVote> votes);
  std::span<const CandidateId> list(VoterIndex v) const {
    return {flat_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t candidates_ = 0;
  std::vector<CandidateId> flat_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint16_t> position_;  // voter-major, kAbsent when not approved
  std::vector<VoterIndex> all_voters_;
  double mean_length_ = 0;

  mutable std::vector<std::int32_t> counts_;
  mutable std::vector<CandidateId> touched_;
  mutable std::vector<std::size_t> cursor_;
  mutable std::vector<CandidateId> short_lists_;
  mutable std::vector<std::pair<std::uint16_t, CandidateId>> sort_buf_;
};

}  // namespace bvc
