#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "bvc/errors.hpp"
#include "bvc/poly.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

using namespace bvc;
using namespace fixtures;

namespace {

// Every approval list over m candidates: all ordered prefixes of all
// permutations, including the empty vote.
std::vector<FallbackVote> all_votes(std::size_t m) {
  std::vector<FallbackVote> out{FallbackVote{}};
  std::vector<std::vector<CandidateId>> frontier{{}};
  for (std::size_t len = 1; len <= m; ++len) {
    std::vector<std::vector<CandidateId>> next;
    for (const auto& p : frontier)
      for (CandidateId c = 0; c < m; ++c)
        if (std::find(p.begin(), p.end(), c) == p.end()) {
          auto q = p;
          q.push_back(c);
          out.emplace_back(q);
          next.push_back(q);
        }
    frontier = std::move(next);
  }
  return out;
}

ControlInstance make(const char* code, Election e, std::vector<FallbackVote> pool, CandidateId c, std::size_t k) {
  ControlInstance inst;
  inst.type = ControlType::parse(code);
  inst.qualified = CandidateSet::full(e.candidate_count());
  inst.election = std::move(e);
  inst.pool = std::move(pool);
  inst.distinguished = c;
  inst.budget = k;
  return inst;
}

void check(const ControlInstance& inst) {
  auto p = solve_poly(inst);
  auto b = solve(inst);
  ASSERT_EQ(p.result.yes, b.yes) << inst.type.code();
  if (p.result.yes) {
    ASSERT_TRUE(p.result.witness);
    EXPECT_LE(p.result.witness->members.size(), *inst.budget);
    EXPECT_FALSE(ref::replay(inst, *p.result.witness).unique(inst.distinguished));
  }
}

}  // namespace

TEST(Poly, RejectsOtherCodes) {
  auto inst = make("ccav", six_voters(), {}, A, 1);
  EXPECT_THROW(solve_poly(inst), ArgumentError);
}

TEST(Poly, DeletingVotersFixture) {
  auto r = dcdv_fallback(four_voters(), A, 2);
  ASSERT_TRUE(r.result.yes);
  auto inst = make("dcdv", four_voters(), {}, A, 2);
  EXPECT_FALSE(ref::replay(inst, *r.result.witness).unique(A));
  EXPECT_FALSE(r.trace.records.empty());
  EXPECT_TRUE(r.trace.records.back().success);
}

TEST(Poly, AlreadyDethroned) {
  // b is the unique winner, zero budget suffices
  auto r = dcav_fallback(six_voters(), {}, B, 0);
  ASSERT_TRUE(r.result.yes);
  EXPECT_TRUE(r.result.witness->members.empty());
  EXPECT_EQ(r.trace.records.front().kind, StageKind::Initial);
}

TEST(Poly, NoWhenBudgetZero) {
  auto r = dcdv_fallback(six_voters(), A, 0);
  EXPECT_FALSE(r.result.yes);
  EXPECT_EQ(r.result.nodes_explored > 0, true);
}

TEST(Poly, AddVotersExhaustiveTwoCandidates) {
  auto votes = all_votes(2);
  for (std::size_t n = 0; n <= 2; ++n) {
    std::vector<std::size_t> idx(n, 0);
    // registered voters as a multiset over the 5 possible votes
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
      if (pos == n) {
        std::vector<FallbackVote> reg;
        for (auto i : idx) reg.push_back(votes[i]);
        for (std::size_t p = 0; p < votes.size(); ++p)
          for (std::size_t q = p; q < votes.size(); ++q)
            for (CandidateId c = 0; c < 2; ++c)
              for (std::size_t k = 0; k <= 2; ++k)
                check(make("dcav", Election(2, reg), {votes[p], votes[q]}, c, k));
        return;
      }
      for (std::size_t i = from; i < votes.size(); ++i) {
        idx[pos] = i;
        rec(pos + 1, i);
      }
    };
    rec(0, 0);
  }
}

TEST(Poly, RandomAgainstBruteForce) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1500; ++t) {
    std::size_t m = 2 + rng() % 4;
    auto e = ref::random_election(m, rng() % 8, rng);
    CandidateId c = static_cast<CandidateId>(rng() % m);
    std::size_t k = rng() % 4;
    check(make("dcav", e, ref::random_votes(m, rng() % 6, rng), c, k));
    check(make("dcdv", e, {}, c, k));
  }
}
