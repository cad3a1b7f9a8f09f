#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "bvc/cli.hpp"
#include "bvc/errors.hpp"
#include "bvc/reductions.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

using namespace bvc;
namespace fs = std::filesystem;

namespace {

const char* kSixVoters = R"({"candidates": ["a", "b", "c", "d"],
 "votes": [{"ranking": ["a", "c", "b", "d"], "multiplicity": 3},
           {"ranking": ["b", "d", "c", "a"], "multiplicity": 2},
           {"ranking": ["d", "a", "c", "b"]}]})";

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bvctl_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    auto p = (dir_ / name).string();
    write_file(p, text);
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

}  // namespace

TEST_F(Cli, Winners) {
  auto f = file("six.json", kSixVoters);
  EXPECT_EQ(run({"winners", f, "--rule=bucklin"}), 0);
  EXPECT_EQ(out_.str(), "winners: a; level 2; score 4\n");
  EXPECT_EQ(run({"winners", f}), 0);
  EXPECT_EQ(out_.str(), "winners: a; level 2; score 4\n");
}

TEST_F(Cli, SingleCandidate) {
  auto f = file("one.json", R"({"candidates": ["z"], "votes": [{"ranking": ["z"]}]})");
  EXPECT_EQ(run({"winners", f}), 0);
  EXPECT_EQ(out_.str(), "winners: z; level 1; score 1\n");
}

TEST_F(Cli, BucklinRejectsTruncatedVotes) {
  auto f = file("t.json", R"({"candidates": ["a", "b"], "votes": [{"ranking": ["a"]}]})");
  EXPECT_EQ(run({"winners", f, "--rule=bucklin"}), cli::kUsage);
  EXPECT_FALSE(err_.str().empty());
  EXPECT_EQ(run({"winners", f}), 0);
}

TEST_F(Cli, BadFiles) {
  EXPECT_EQ(run({"winners", path("missing.json")}), cli::kUsage);
  auto bad = file("bad.json", "{not json");
  EXPECT_EQ(run({"winners", bad}), cli::kUsage);
  auto dup = file("dup.json", R"({"candidates": ["a", "a"], "votes": []})");
  EXPECT_EQ(run({"winners", dup}), cli::kUsage);
  auto unk = file("unk.json", R"({"candidates": ["a"], "votes": [{"ranking": ["q"]}]})");
  EXPECT_EQ(run({"winners", unk}), cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}), cli::kUsage);
}

TEST_F(Cli, SolveDeleteCandidates) {
  auto f = file("six.json", kSixVoters);
  EXPECT_EQ(run({"solve", f, "--control=dcdc", "--target=a", "--budget=1"}), cli::kYes);
  EXPECT_EQ(out_.str(), "yes; delete candidates {b}\n");
  EXPECT_EQ(run({"solve", f, "--control=ccdc", "--target=a", "--budget=0"}), cli::kYes);
  EXPECT_EQ(out_.str(), "yes; delete candidates {}\n");
  EXPECT_EQ(run({"solve", f, "--control=ccdc", "--target=b", "--budget=0"}), cli::kNo);
  EXPECT_EQ(out_.str(), "no\n");
}

TEST_F(Cli, SolveArgumentErrors) {
  auto f = file("six.json", kSixVoters);
  EXPECT_EQ(run({"solve", f, "--control=dcdc", "--target=a"}), cli::kUsage);
  EXPECT_EQ(run({"solve", f, "--control=ccpc", "--target=a", "--tie=te", "--budget=1"}), cli::kUsage);
  EXPECT_EQ(run({"solve", f, "--control=ccdc", "--target=zz", "--budget=1"}), cli::kUsage);
  EXPECT_EQ(run({"solve", f, "--control=ccdc", "--target=a", "--budget=1", "--engine=poly"}), cli::kUsage);
  EXPECT_EQ(run({"solve", f, "--control=nope", "--target=a"}), cli::kUsage);
}

TEST_F(Cli, SolvePartitions) {
  auto f = file("six.json", kSixVoters);
  EXPECT_EQ(run({"solve", f, "--control=ccpc", "--tie=tp", "--target=c"}), cli::kYes);
  EXPECT_EQ(out_.str().rfind("yes; partition candidates {", 0), 0u);
  auto g = file("four.json", R"({"candidates": ["a", "b", "c", "d"],
    "votes": [{"ranking": ["a", "c", "b", "d"]}, {"ranking": ["d", "c", "a", "b"]},
              {"ranking": ["b", "a", "c", "d"], "multiplicity": 2}]})");
  EXPECT_EQ(run({"solve", g, "--control=dcpv-te", "--target=a"}), cli::kYes);
  EXPECT_EQ(out_.str().rfind("yes; partition voters {", 0), 0u);
}

TEST_F(Cli, PolyAndBruteAgree) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    auto e = ref::random_election(3, 4, rng);
    std::vector<std::string> names{"a", "b", "c"};
    auto doc = make_document(names, e);
    auto f = path("r.json");
    for (const char* code : {"dcav", "dcdv"}) {
      if (std::string(code) == "dcav") doc.pool = compress_votes(ref::random_votes(3, 3, rng), names);
      else doc.pool.clear();
      save_document(doc, f);
      std::vector<std::string> base{"solve", f, std::string("--control=") + code, "--target=a", "--budget=1"};
      auto brute = base, poly = base;
      poly.push_back("--engine=poly");
      int rb = run(brute);
      int rp = run(poly);
      ASSERT_EQ(rb, rp) << code;
      ASSERT_TRUE(rb == cli::kYes || rb == cli::kNo) << err_.str();
    }
  }
}

TEST_F(Cli, CapacityExitCode) {
  std::mt19937_64 rng(3);
  auto doc = make_document({"a", "b", "c"}, ref::random_election(3, 40, rng));
  auto f = path("big.json");
  save_document(doc, f);
  ::setenv(SolverCaps::kEnvVar, "12", 1);
  EXPECT_EQ(run({"solve", f, "--control=ccpv", "--tie=te", "--target=a"}), cli::kCapacity);
  ::unsetenv(SolverCaps::kEnvVar);
  EXPECT_NE(err_.str().find("capacity"), std::string::npos);
}

TEST_F(Cli, ReduceStarAddVoters) {
  auto src = file("star.json", R"({"vertices": 4, "edges": [[0,1],[0,2],[0,3]], "k": 2})");
  auto prefix = path("star");
  ASSERT_EQ(run({"reduce", "--family=ds-ccav", src, "--out=" + prefix}), 0) << err_.str();
  auto doc = load_document(prefix + ".election.json");
  std::size_t registered = 0, pool = 0;
  for (const auto& v : doc.votes) registered += v.multiplicity;
  for (const auto& v : doc.pool) pool += v.multiplicity;
  EXPECT_EQ(registered + pool, 5u);
  EXPECT_TRUE(fs::exists(prefix + ".instance.json"));
  EXPECT_TRUE(fs::exists(prefix + ".meta.json"));
  // the source file is untouched
  EXPECT_NE(read_file(src).find("vertices"), std::string::npos);
  EXPECT_EQ(run({"solve", prefix + ".election.json", "--instance=" + prefix + ".instance.json"}), cli::kYes);
}

TEST_F(Cli, ReduceRhsPartition) {
  auto src = file("rhs.json", R"({"base_size": 3, "sets": [[0],[1],[2],[0,1]], "k": 2})");
  auto prefix = path("rhs");
  ASSERT_EQ(run({"reduce", "--family=rhs-partition", src, "--out=" + prefix, "--variant=dcrpc-tp"}), 0)
      << err_.str();
  EXPECT_NE(out_.str().find("95 registered"), std::string::npos) << out_.str();
  auto doc = load_document(prefix + ".election.json");
  std::size_t voters = 0;
  for (const auto& v : doc.votes) voters += v.multiplicity;
  EXPECT_EQ(voters, 95u);
}

TEST_F(Cli, ReduceDomainViolation) {
  auto src = file("rhs.json", R"({"base_size": 3, "sets": [[0],[1],[2]], "k": 2})");
  EXPECT_EQ(run({"reduce", "--family=rhs-partition", src, "--out=" + path("x")}), cli::kUsage);
  EXPECT_NE(err_.str().find("n > m > k > 1"), std::string::npos);
}

TEST_F(Cli, ReduceHsToRhs) {
  auto src = file("hs.json", R"({"base_size": 4, "sets": [[0,1],[2,3]], "k": 2})");
  auto prefix = path("hs");
  ASSERT_EQ(run({"reduce", "--family=hs-to-rhs", src, "--out=" + prefix}), 0) << err_.str();
  EXPECT_TRUE(fs::exists(prefix + ".rhs.json"));
  EXPECT_NE(read_file(prefix + ".rhs.json").find("\"k\": 3"), std::string::npos);
}

TEST_F(Cli, ReduceFallbackWinners) {
  auto src = file("rhs.json", R"({"base_size": 3, "sets": [[0],[1],[2],[0,1]], "k": 2})");
  auto prefix = path("fv");
  ASSERT_EQ(run({"reduce", "--family=rhs-fv-dcpv-tp", src, "--out=" + prefix}), 0) << err_.str();
  ASSERT_EQ(run({"winners", prefix + ".election.json"}), 0);
  EXPECT_EQ(out_.str().rfind("winners: c; level 2", 0), 0u);
}

TEST_F(Cli, Verify) {
  EXPECT_EQ(run({"verify", "--family=ds-ccdc", "--sweep=n=1..3"}), 0) << err_.str();
  EXPECT_EQ(out_.str().rfind("agree: 100%", 0), 0u) << out_.str();
  EXPECT_EQ(run({"verify", "--family=x3c-ccpv", "--sweep=m=2,n=1..2", "--tie=te"}), 0) << err_.str();
  EXPECT_EQ(out_.str().rfind("agree: 100%", 0), 0u) << out_.str();
}

TEST_F(Cli, VerifyFallbackIsPartial) {
  auto src = file("rhs.json", R"({"base_size": 3, "sets": [[0],[1],[2],[0,1]], "k": 2})");
  run({"verify", "--family=rhs-fv-dcpv-tp", src, "--samples=200"});
  EXPECT_NE(out_.str().find("forward-direction + property checks only (partial)"), std::string::npos);
}

TEST(Document, RoundTrip) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    std::size_t m = 1 + rng() % 5;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("c" + std::to_string(i));
    auto e = ref::random_election(m, rng() % 10, rng);
    auto doc = make_document(names, e);
    doc.pool = compress_votes(ref::random_votes(m, rng() % 4, rng), names);
    auto back = parse_document(serialize_document(doc));
    ASSERT_EQ(back, doc);
    ASSERT_EQ(to_election(back), e);
  }
}

TEST(Document, GeneratedInstancesRoundTrip) {
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  auto r = ds_to_bv_add_voters(star, 2);
  auto doc = make_document(r.meta.candidate_names, r.instance.election);
  doc.pool = compress_votes(r.instance.pool, r.meta.candidate_names);
  auto back = parse_document(serialize_document(doc));
  EXPECT_EQ(back, doc);
  EXPECT_EQ(pool_votes(back), r.instance.pool);
}

TEST(Document, Validation) {
  EXPECT_THROW(parse_document(R"({"candidates": ["a"], "votes": [{"ranking": ["a"], "multiplicity": 0}]})"),
               ArgumentError);
  EXPECT_THROW(parse_document(R"({"candidates": ["a"], "votes": [{"ranking": ["a", "a"]}]})"), ArgumentError);
  EXPECT_THROW(parse_document(R"({"candidates": ["a"]})"), ArgumentError);
  EXPECT_THROW(parse_document(R"({"candidates": ["a"], "votes": [], "spoilers": ["b"]})"), ArgumentError);
}

TEST(Format, Reports) {
  WinnerReport r{{0, 1}, WinnerMode::ApprovalFallback, 0, 3};
  EXPECT_EQ(cli::format_report(r, {"a", "b"}), "winners: a, b; approval; score 3");
  EXPECT_EQ(cli::format_report(WinnerReport{}, {"a"}), "winners: none");
}
