#include "bvc/winner_engine.hpp"

#include <algorithm>

#include "bvc/errors.hpp"

namespace bvc {

WinnerEngine::WinnerEngine(const Election& e) : candidates_(e.candidate_count()) {
  init(e.votes());
}

WinnerEngine::WinnerEngine(std::size_t candidate_count, std::span<const FallbackVote> votes)
    : candidates_(candidate_count) {
  if (candidates_ >= kAbsent) throw ArgumentError("too many candidates");
  init(votes);
}

void WinnerEngine::init(std::span<const FallbackVote> votes) {
  offsets_.assign(1, 0);
  position_.assign(votes.size() * candidates_, kAbsent);
  for (std::size_t v = 0; v < votes.size(); ++v) {
    auto a = votes[v].approved();
    for (std::size_t p = 0; p < a.size(); ++p) {
      if (a[p] >= candidates_) throw ArgumentError("vote names unknown candidate");
      flat_.push_back(a[p]);
      position_[v * candidates_ + a[p]] = static_cast<std::uint16_t>(p);
    }
    offsets_.push_back(flat_.size());
    all_voters_.push_back(static_cast<VoterIndex>(v));
  }
  mean_length_ = votes.empty() ? 0.0 : static_cast<double>(flat_.size()) / votes.size();
  counts_.assign(candidates_, 0);
}

WinnerReport WinnerEngine::evaluate(const CandidateSet& active) const {
  return evaluate(active, all_voters_);
}

WinnerReport WinnerEngine::evaluate(const CandidateSet& active,
                                    std::span<const VoterIndex> voters) const {
  WinnerReport report;
  std::vector<CandidateId> members = active.members();
  if (members.empty()) return report;

  const std::int32_t maj = static_cast<std::int32_t>(majority_threshold(voters.size()));
  const std::size_t n = voters.size();

  // Small active sets: build each restricted list from the position table.
  // Large ones: walk the full lists lazily and skip inactive candidates.
  const bool small = members.size() <= 12 && static_cast<double>(members.size()) < mean_length_;
  cursor_.assign(n, 0);
  if (small) {
    short_lists_.assign(n * members.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint16_t* pos = position_.data() + voters[i] * candidates_;
      sort_buf_.clear();
      for (CandidateId c : members)
        if (pos[c] != kAbsent) sort_buf_.emplace_back(pos[c], c);
      std::sort(sort_buf_.begin(), sort_buf_.end());
      for (std::size_t j = 0; j < sort_buf_.size(); ++j)
        short_lists_[i * members.size() + j] = sort_buf_[j].second;
      cursor_[i] = sort_buf_.size();  // reused as restricted length
    }
  }

  touched_.clear();
  auto finish = [&](WinnerMode mode, std::size_t level) {
    std::int32_t best = 0;
    for (CandidateId c : touched_) best = std::max(best, counts_[c]);
    report.mode = mode;
    report.level = level;
    report.score = static_cast<std::size_t>(best);
    if (mode == WinnerMode::ApprovalFallback && best == 0) {
      report.winners = members;
    } else {
      for (CandidateId c : touched_)
        if (counts_[c] == best) report.winners.push_back(c);
      std::sort(report.winners.begin(), report.winners.end());
    }
    for (CandidateId c : touched_) counts_[c] = 0;
  };

  auto bump = [&](CandidateId c) {
    if (counts_[c]++ == 0) touched_.push_back(c);
    return counts_[c] >= maj;
  };

  for (std::size_t level = 1; level <= members.size(); ++level) {
    bool reached = false;
    bool progress = false;
    if (small) {
      const std::size_t width = members.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (cursor_[i] < level) continue;
        progress = true;
        reached |= bump(short_lists_[i * width + level - 1]);
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        auto lst = list(voters[i]);
        std::size_t& cur = cursor_[i];
        while (cur < lst.size() && !active.contains(lst[cur])) ++cur;
        if (cur == lst.size()) continue;
        progress = true;
        reached |= bump(lst[cur]);
        ++cur;
      }
    }
    if (reached) {
      finish(WinnerMode::MajorityLevel, level);
      return report;
    }
    if (!progress) break;
  }
  finish(WinnerMode::ApprovalFallback, 0);
  return report;
}

}  // namespace bvc
