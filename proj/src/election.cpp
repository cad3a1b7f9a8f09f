#include "bvc/election.hpp"

#include <algorithm>
#include <string>

#include "bvc/errors.hpp"
#include "bvc/winner_engine.hpp"

namespace bvc {

FallbackVote::FallbackVote(std::vector<CandidateId> approved) : approved_(std::move(approved)) {
  std::vector<CandidateId> sorted = approved_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ArgumentError("vote approves a candidate twice");
}

std::optional<std::size_t> FallbackVote::position_of(CandidateId c) const {
  auto it = std::find(approved_.begin(), approved_.end(), c);
  if (it == approved_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - approved_.begin());
}

Election::Election(std::size_t candidate_count, std::vector<FallbackVote> votes)
    : candidate_count_(candidate_count), votes_(std::move(votes)) {
  if (candidate_count_ >= kernels::kUnranked)
    throw ArgumentError("too many candidates: " + std::to_string(candidate_count_));
  for (const auto& v : votes_)
    for (CandidateId c : v.approved())
      if (c >= candidate_count_)
        throw ArgumentError("vote names unknown candidate " + std::to_string(c));
}

bool Election::is_bucklin() const {
  return std::all_of(votes_.begin(), votes_.end(),
                     [&](const FallbackVote& v) { return v.length() == candidate_count_; });
}

bool WinnerReport::is_winner(CandidateId c) const {
  return std::binary_search(winners.begin(), winners.end(), c);
}

namespace {

void check_candidate(const Election& e, CandidateId c) {
  if (c >= e.candidate_count()) throw ArgumentError("unknown candidate " + std::to_string(c));
}

}  // namespace

std::size_t level_score(const Election& e, CandidateId c, std::size_t level) {
  check_candidate(e, c);
  std::size_t n = 0;
  for (const auto& v : e.votes()) {
    auto p = v.position_of(c);
    if (p && *p < level) ++n;
  }
  return n;
}

std::size_t approval_score(const Election& e, CandidateId c) {
  check_candidate(e, c);
  return level_score(e, c, e.candidate_count());
}

long deficit(const Election& e, CandidateId c, std::size_t level) {
  return static_cast<long>(majority_threshold(e.voter_count())) -
         static_cast<long>(level_score(e, c, level));
}

WinnerReport fallback_winners(const Election& e) {
  WinnerEngine engine(e);
  return engine.evaluate(CandidateSet::full(e.candidate_count()));
}

WinnerReport bucklin_winners(const Election& e) {
  if (!e.is_bucklin()) throw PreconditionError("Bucklin voting needs full rankings");
  return fallback_winners(e);
}

Restriction restrict_candidates(const Election& e, const CandidateSet& keep) {
  constexpr CandidateId kDropped = ~CandidateId{0};
  std::vector<CandidateId> fresh(e.candidate_count(), kDropped);
  Restriction r;
  for (CandidateId c = 0; c < e.candidate_count(); ++c) {
    if (keep.contains(c)) {
      fresh[c] = static_cast<CandidateId>(r.original_ids.size());
      r.original_ids.push_back(c);
    }
  }
  std::vector<FallbackVote> votes;
  votes.reserve(e.voter_count());
  for (const auto& v : e.votes()) {
    std::vector<CandidateId> kept;
    for (CandidateId c : v.approved())
      if (fresh[c] != kDropped) kept.push_back(fresh[c]);
    votes.emplace_back(std::move(kept));
  }
  r.election = Election(r.original_ids.size(), std::move(votes));
  return r;
}

ScoreMatrix::ScoreMatrix(const Election& e)
    : candidates_(e.candidate_count()),
      voters_(e.voter_count()),
      by_candidate_(candidates_ * voters_, kernels::kUnranked),
      by_voter_(candidates_ * voters_, kernels::kUnranked) {
  for (std::size_t v = 0; v < voters_; ++v) {
    auto list = e.vote(v).approved();
    max_length_ = std::max(max_length_, list.size());
    for (std::size_t p = 0; p < list.size(); ++p) {
      auto r = static_cast<kernels::Rank>(p);
      by_candidate_[list[p] * voters_ + v] = r;
      by_voter_[v * candidates_ + list[p]] = r;
    }
  }
}

std::span<const kernels::Rank> ScoreMatrix::column(CandidateId c) const {
  return {by_candidate_.data() + c * voters_, voters_};
}

std::span<const kernels::Rank> ScoreMatrix::row(std::size_t v) const {
  return {by_voter_.data() + v * candidates_, candidates_};
}

namespace {

kernels::Rank clamp_level(std::size_t level) {
  return static_cast<kernels::Rank>(std::min<std::size_t>(level, kernels::kUnranked));
}

}  // namespace

std::size_t ScoreMatrix::level_score(CandidateId c, std::size_t level) const {
  if (c >= candidates_) throw ArgumentError("unknown candidate " + std::to_string(c));
  return kernels::count_below(column(c), clamp_level(level));
}

std::size_t ScoreMatrix::approval_score(CandidateId c) const {
  return level_score(c, candidates_);
}

std::vector<std::int32_t> ScoreMatrix::level_scores(std::size_t level) const {
  std::vector<std::int32_t> counts(candidates_, 0);
  auto t = clamp_level(level);
  for (std::size_t v = 0; v < voters_; ++v) kernels::accumulate_below(row(v), t, counts);
  return counts;
}

WinnerReport ScoreMatrix::winners() const {
  WinnerReport r;
  if (candidates_ == 0) return r;
  auto maj = static_cast<std::int32_t>(majority_threshold(voters_));
  auto pick = [&](const std::vector<std::int32_t>& s, WinnerMode mode, std::size_t level) {
    std::int32_t best = *std::max_element(s.begin(), s.end());
    r.mode = mode;
    r.level = level;
    r.score = static_cast<std::size_t>(best);
    for (CandidateId c = 0; c < candidates_; ++c)
      if (s[c] == best) r.winners.push_back(c);
    return r;
  };
  for (std::size_t level = 1; level <= max_length_; ++level) {
    auto s = level_scores(level);
    if (*std::max_element(s.begin(), s.end()) >= maj) return pick(s, WinnerMode::MajorityLevel, level);
  }
  return pick(level_scores(max_length_), WinnerMode::ApprovalFallback, 0);
}

}  // namespace bvc
