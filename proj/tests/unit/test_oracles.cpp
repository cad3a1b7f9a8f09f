#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bvc/errors.hpp"
#include "bvc/oracles.hpp"
#include "reference.hpp"

using namespace bvc;

namespace {

SetSystem random_sets(std::size_t m, std::size_t n, std::mt19937_64& rng) {
  SetSystem s;
  s.base_size = m;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> set;
    for (std::uint32_t x = 0; x < m; ++x)
      if (rng() % 3 == 0) set.push_back(x);
    if (set.empty()) set.push_back(static_cast<std::uint32_t>(rng() % m));
    s.subsets.push_back(set);
  }
  return s;
}

}  // namespace

TEST(DominatingSet, Examples) {
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(solve_dominating_set(star, 1), std::vector<Vertex>{0});
  EXPECT_FALSE(solve_dominating_set(Graph(3, {}), 2));
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto d = solve_dominating_set(c4, 2);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->size(), 2u);
  EXPECT_TRUE(is_dominating(c4, *d));
  EXPECT_EQ(closed_neighborhood(star, 1), (std::vector<Vertex>{0, 1}));
}

TEST(DominatingSet, AllSmallGraphsMatchNaive) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& g : all_graphs(n))
      for (std::size_t k = 0; k <= n; ++k) {
        auto d = solve_dominating_set(g, k);
        ASSERT_EQ(d.has_value(), ref::dominating_set_exists(g, k));
        if (d) {
          EXPECT_LE(d->size(), k);
          EXPECT_TRUE(is_dominating(g, *d));
        }
        if (k > 0 && solve_dominating_set(g, k - 1)) { EXPECT_TRUE(d); }  // monotone in k
      }
  EXPECT_EQ(all_graphs(3).size(), 8u);
}

TEST(HittingSet, Examples) {
  SetSystem s{2, {{0}, {1}}};
  EXPECT_EQ(solve_hitting_set(s, 2), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_FALSE(solve_hitting_set(SetSystem{3, {{0}, {1}, {2}}}, 2));
  SetSystem tri{3, {{0, 1}, {1, 2}, {0, 2}}};
  EXPECT_FALSE(solve_hitting_set(tri, 1));
  EXPECT_TRUE(solve_hitting_set(tri, 2));
  EXPECT_THROW((SetSystem{2, {{0, 0}}}.validate()), ArgumentError);
  EXPECT_THROW((SetSystem{2, {{2}}}.validate()), ArgumentError);
}

TEST(HittingSet, RandomMatchesNaive) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    auto s = random_sets(1 + rng() % 8, 1 + rng() % 8, rng);
    std::size_t k = rng() % 5;
    auto h = solve_hitting_set(s, k);
    ASSERT_EQ(h.has_value(), ref::hitting_set_exists(s, k));
    if (h) { EXPECT_TRUE(is_hitting_set(s, *h)); }
  }
}

TEST(ExactCover, Examples) {
  SetSystem s{6, {{0, 1, 2}, {3, 4, 5}, {0, 3, 4}}};
  EXPECT_EQ(solve_x3c(s), (std::vector<std::size_t>{0, 1}));
  EXPECT_FALSE(solve_x3c(SetSystem{6, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}}}));
  EXPECT_FALSE(solve_x3c(SetSystem{6, {{0, 1, 2}}}));
  EXPECT_THROW(solve_x3c(SetSystem{6, {{0, 1}}}), ArgumentError);
}

TEST(ExactCover, RandomMatchesNaive) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 1000; ++t) {
    std::size_t m = 2 + rng() % 2;
    SetSystem s;
    s.base_size = 3 * m;
    std::size_t n = 1 + rng() % 8;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> all(3 * m);
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(3);
      std::sort(all.begin(), all.end());
      s.subsets.push_back(all);
    }
    auto x = solve_x3c(s);
    ASSERT_EQ(x.has_value(), ref::exact_cover_exists(s));
    if (x) { EXPECT_EQ(x->size(), m); }
  }
}

TEST(Validity, Predicates) {
  SetSystem s{3, {{0}, {1}, {2}, {0, 1}}};
  EXPECT_TRUE(is_rhs_valid(s, 2));
  EXPECT_FALSE(is_rhs_valid(s, 1));
  EXPECT_FALSE(is_rhs_valid(s, 3));
  EXPECT_TRUE(is_x3c_valid(SetSystem{6, {{0, 1, 2}}}));
  EXPECT_FALSE(is_x3c_valid(SetSystem{3, {{0, 1, 2}}}));
}
