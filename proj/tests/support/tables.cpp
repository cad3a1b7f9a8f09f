#include "tables.hpp"

#include <algorithm>
#include <cstdint>

#include "reference.hpp"

namespace ref {

using bvc::CandidateId;

namespace {

struct Checker {
  const bvc::Reduction& r;
  std::vector<std::string>& failures;
  std::vector<Vote> votes;
  Set active;
  std::size_t checked = 0;

  Checker(const bvc::Reduction& red, std::vector<std::string>& f) : r(red), failures(f) {
    votes = votes_of(r.instance.election);
    active.assign(r.instance.election.candidate_count(), false);
    r.instance.qualified.for_each([&](CandidateId c) { active[c] = true; });
  }

  // Restricted to the active candidates.
  std::size_t score(CandidateId c, std::size_t level) const {
    std::size_t s = 0;
    for (const auto& v : votes) {
      std::size_t pos = 0;
      for (auto x : v) {
        if (!active[x]) continue;
        if (pos++ >= level) break;
        if (x == c) {
          ++s;
          break;
        }
      }
    }
    return s;
  }

  void eq(const std::string& what, std::size_t got, std::size_t want) {
    ++checked;
    if (got != want)
      failures.push_back(r.meta.family + ": " + what + " = " + std::to_string(got) + ", expected " +
                         std::to_string(want));
  }
  void le(const std::string& what, std::size_t got, std::size_t bound) {
    ++checked;
    if (got > bound)
      failures.push_back(r.meta.family + ": " + what + " = " + std::to_string(got) + ", expected <= " +
                         std::to_string(bound));
  }

  CandidateId id(const char* name) const { return r.meta.candidate(name); }
  std::size_t at(const char* name, std::size_t level) const { return score(id(name), level); }
  std::size_t group_max(const char* g, std::size_t level) const {
    std::size_t best = 0;
    for (auto c : r.meta.group(g).members) best = std::max(best, score(c, level));
    return best;
  }
  std::size_t group_min(const char* g, std::size_t level) const {
    std::size_t best = SIZE_MAX;
    for (auto c : r.meta.group(g).members) best = std::min(best, score(c, level));
    return best;
  }
  std::size_t p(const char* key) const { return static_cast<std::size_t>(r.meta.parameters.at(key)); }
  std::string lv(const char* who, std::size_t level) const { return std::string(who) + "@" + std::to_string(level); }
};

}  // namespace

std::size_t check_score_table(const bvc::Reduction& r, std::vector<std::string>& failures) {
  Checker ck(r, failures);
  const auto& fam = r.meta.family;
  if (fam == "ds-ccdc") {
    const std::size_t n = ck.p("n"), k = ck.p("k");
    ck.eq("D min" + ck.lv("", k + 1), ck.group_min("D", k + 1), n - k);
    ck.eq("D max" + ck.lv("", k + 1), ck.group_max("D", k + 1), n - k);
    if (k + 2 <= n) ck.eq("D max" + ck.lv("", k + 2), ck.group_max("D", k + 2), n - k);
    ck.eq("D min" + ck.lv("", n + k), ck.group_min("D", n + k), n);
    ck.eq("D max" + ck.lv("", n + k), ck.group_max("D", n + k), n);
    ck.eq("D min" + ck.lv("", n + k + 1), ck.group_min("D", n + k + 1), n + 1);
    ck.eq(ck.lv("w", k + 1), ck.at("w", k + 1), 0);
    ck.eq(ck.lv("w", k + 2), ck.at("w", k + 2), 1);
    ck.eq(ck.lv("w", n + k), ck.at("w", n + k), 1);
    ck.eq(ck.lv("w", n + k + 1), ck.at("w", n + k + 1), n + 1);
    ck.le("B max" + ck.lv("", n + k + 1), ck.group_max("B", n + k + 1), n);
  } else if (fam == "ds-dcdc") {
    const std::size_t n = ck.p("n");
    ck.eq(ck.lv("w", n - 1), ck.at("w", n - 1), 1);
    ck.eq(ck.lv("w", n), ck.at("w", n), 1);
    ck.eq(ck.lv("w", n + 1), ck.at("w", n + 1), n + 1);
    ck.eq(ck.lv("c", n - 1), ck.at("c", n - 1), 0);
    ck.eq(ck.lv("c", n), ck.at("c", n), n + 1);
    ck.eq(ck.lv("c", n + 1), ck.at("c", n + 1), n + 1);
  } else if (fam == "ds-ccac" || fam == "ds-dcac" || fam == "ds-ccauc" || fam == "ds-dcauc") {
    const std::size_t n = ck.p("n");
    const std::size_t t = fam.rfind("ds-dc", 0) == 0 ? 2 : 1;
    ck.eq(ck.lv("c", n - 1), ck.at("c", n - 1), t * n);
    ck.eq(ck.lv("c", n), ck.at("c", n), 2 * t * n);
    ck.eq(ck.lv("c", n + 1), ck.at("c", n + 1), 2 * t * n + 1);
    ck.eq(ck.lv("w", n - 1), ck.at("w", n - 1), 0);
    ck.eq(ck.lv("w", n), ck.at("w", n), t * n + 1);
    ck.eq(ck.lv("w", n + 1), ck.at("w", n + 1), t * n + 1);
    // with every spoiler added
    ck.active.assign(ck.active.size(), true);
    ck.eq("c@n with B added", ck.at("c", n), t * n);
  } else if (fam == "ds-ccav") {
    ck.eq(ck.lv("c", 1), ck.at("c", 1), ck.p("k") - 1);
  } else if (fam == "ds-ccdv") {
    const std::size_t n = ck.p("n"), k = ck.p("k");
    ck.eq(ck.lv("c", 1), ck.at("c", 1), k - 1);
    ck.eq(ck.lv("c", n + 1), ck.at("c", n + 1), n + k - 1);
    ck.eq(ck.lv("w", n + 1), ck.at("w", n + 1), n);
    ck.eq("B min" + ck.lv("", n + 1), ck.group_min("B", n + 1), n);
    ck.eq("B max" + ck.lv("", n + 1), ck.group_max("B", n + 1), n);
  } else if (fam == "ds-dcpv-te") {
    const std::size_t n = ck.p("n"), k = ck.p("k");
    ck.eq(ck.lv("c", 1), ck.at("c", 1), k + n);
    ck.eq(ck.lv("c", 2), ck.at("c", 2), k + n);
    ck.eq(ck.lv("c", 3), ck.at("c", 3), k + n + 1);
    ck.eq(ck.lv("w", 1), ck.at("w", 1), 0);
    ck.eq(ck.lv("w", 2), ck.at("w", 2), 1);
    ck.eq(ck.lv("w", 3), ck.at("w", 3), 1);
    ck.eq(ck.lv("x", 1), ck.at("x", 1), k);
    ck.eq(ck.lv("x", 3), ck.at("x", 3), k);
    for (const char* g : {"B", "D", "E", "F", "H"})
      if (!r.meta.group(g).members.empty()) ck.le(std::string(g) + " max@3", ck.group_max(g, 3), 1);
    for (const char* s : {"u", "v", "y"}) ck.le(ck.lv(s, 3), ck.at(s, 3), 1);
  } else if (fam == "rhs-partition") {
    const std::size_t n = ck.p("n"), m = ck.p("m"), k = ck.p("k");
    ck.eq("voters", r.instance.election.voter_count(), 6 * n * (k + 1) + 4 * m + 11);
    ck.active.assign(ck.active.size(), false);
    for (const char* s : {"c", "d", "w"}) ck.active[ck.id(s)] = true;
    ck.eq("c@2 in {c,d,w}", ck.at("c", 2), 6 * n * (k + 1) + 2 * (m - k) + 9);
  } else if (fam == "x3c-ccpv-te" || fam == "x3c-ccpv-tp") {
    const std::size_t n = ck.p("n"), m = ck.p("m");
    ck.eq(ck.lv("c", 1), ck.at("c", 1), n);
    ck.eq(ck.lv("c", 2), ck.at("c", 2), n + m + 1);
    ck.eq(ck.lv("x", 1), ck.at("x", 1), m + 1);
    ck.eq(ck.lv("x", 2), ck.at("x", 2), m + 1);
    ck.eq(ck.lv("w", 3 * m), ck.at("w", 3 * m), 0);
    ck.eq(ck.lv("w", 3 * m + 1), ck.at("w", 3 * m + 1), n);
    ck.eq("B min" + ck.lv("", 3 * m), ck.group_min("B", 3 * m), n);
    ck.eq("B max" + ck.lv("", 3 * m), ck.group_max("B", 3 * m), n);
  } else if (fam == "rhs-fv-dcpv-tp") {
    const std::size_t n = ck.p("n"), m = ck.p("m"), k = ck.p("k"), N = n * (k + 1);
    ck.eq(ck.lv("c", 1), ck.at("c", 1), N + 2 * m + m * k);
    ck.eq(ck.lv("c", 2), ck.at("c", 2), N + 2 * m + m * k + 1);
    ck.eq(ck.lv("c", m + 2), ck.at("c", m + 2), 2 * N + 2 * m + m * k + 1);
    ck.eq(ck.lv("w", 1), ck.at("w", 1), N + 1);
    ck.eq(ck.lv("w", 2), ck.at("w", 2), N + m * k + k);
    ck.eq(ck.lv("w", 3), ck.at("w", 3), N + 2 * m + m * k + k + 1);
    ck.eq(ck.lv("w", m + 2), ck.at("w", m + 2), N + 2 * m + m * k + k + 1);
    ck.eq("B max@1", ck.group_max("B", 1), k - 1);
    ck.eq("E max", ck.group_max("E", m + 2), 1);
    ck.eq("E min", ck.group_min("E", m + 2), 1);
  }
  return ck.checked;
}

}  // namespace ref
