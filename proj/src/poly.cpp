#include "bvc/poly.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "bvc/errors.hpp"

namespace bvc {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Positions of c and of every candidate, per vote.
struct Positions {
  std::size_t m = 0;
  std::vector<std::size_t> pos;  // vote-major, kNone when not approved

  Positions(std::size_t candidates, std::span<const FallbackVote> votes)
      : m(candidates), pos(candidates * votes.size(), kNone) {
    for (std::size_t v = 0; v < votes.size(); ++v) {
      auto a = votes[v].approved();
      for (std::size_t p = 0; p < a.size(); ++p) pos[v * m + a[p]] = p;
    }
  }
  std::size_t at(std::size_t v, CandidateId c) const { return pos[v * m + c]; }
};

bool within(std::size_t p, std::size_t level) { return p != kNone && p < level; }

// Voter kinds relative to (c, d, level i).
enum Kind : std::size_t {
  kDOnly,      // d in top i, c not in top i
  kBothLate,   // d in top i, c exactly at level i
  kBothEarly,  // d in top i, c in top i-1
  kNeither,    // neither in top i
  kCLate,      // d not in top i, c exactly at level i
  kCEarly,     // d not in top i, c in top i-1
  kKinds
};

Kind classify(std::size_t pc, std::size_t pd, std::size_t level) {
  bool d_in = within(pd, level);
  bool c_early = within(pc, level - 1);
  bool c_late = !c_early && within(pc, level);
  if (d_in) return c_early ? kBothEarly : (c_late ? kBothLate : kDOnly);
  return c_early ? kCEarly : (c_late ? kCLate : kNeither);
}

// Approval-stage kinds.
enum AKind : std::size_t { kAD, kANone, kABoth, kAC, kAKinds };

AKind classify_approval(std::size_t pc, std::size_t pd) {
  bool c = pc != kNone;
  bool d = pd != kNone;
  if (d && !c) return kAD;
  if (d && c) return kABoth;
  return c ? kAC : kANone;
}

using Counts = std::array<long, kKinds>;
using ACounts = std::array<long, kAKinds>;

struct Scores {
  long d = 0;        // score_i(d)
  long c = 0;        // score_i(c)
  long c_prev = 0;   // score_{i-1}(c)
};

Check majority_check(const Scores& s, long maj) {
  if (s.d < s.c) return Check::TieOrBeat;
  if (s.d < maj) return Check::RivalMajority;
  if (s.c_prev >= maj) return Check::NoEarlierMajority;
  return Check::None;
}

Check approval_check(long app_c, long app_d, long maj) {
  if (app_c >= maj) return Check::ApprovalBelowMajority;
  if (app_d < app_c) return Check::ApprovalCatchUp;
  return Check::None;
}

long maj_of(long voters) { return voters / 2 + 1; }

// Moves up to `cap` more voters of kind k into `chosen`.
long take(Counts& chosen, const Counts& avail, Kind k, long& remaining, long cap) {
  long room = std::min(avail[k] - chosen[k], std::max(0L, cap));
  long t = std::min(room, remaining);
  chosen[k] += t;
  remaining -= t;
  return t;
}

// Best mix of added voters for a fixed total (see header for the argument).
Counts adding_fill(const Counts& avail, const Scores& base, long registered, long total) {
  constexpr long kAny = std::numeric_limits<long>::max();
  Counts x{};
  long rem = total;
  long maj = maj_of(registered + total);
  take(x, avail, kDOnly, rem, kAny);
  take(x, avail, kBothLate, rem, kAny);
  long upper_gamma = maj - base.c_prev - 1;  // be + ne <= this
  long upper_beta = base.d + x[kDOnly] - base.c;  // nl + ne <= this
  take(x, avail, kBothEarly, rem, upper_gamma);
  take(x, avail, kNeither, rem, kAny);
  take(x, avail, kCLate, rem, upper_beta);
  take(x, avail, kCEarly, rem, std::min(upper_gamma - x[kBothEarly], upper_beta - x[kCLate]));
  // Whatever is left breaks a condition no matter where it goes.
  for (Kind k : {kBothEarly, kCLate, kCEarly}) take(x, avail, k, rem, kAny);
  return x;
}

Scores adding_scores(const Scores& base, const Counts& x) {
  Scores s = base;
  s.d += x[kDOnly] + x[kBothLate] + x[kBothEarly];
  s.c += x[kBothLate] + x[kBothEarly] + x[kCLate] + x[kCEarly];
  s.c_prev += x[kBothEarly] + x[kCEarly];
  return s;
}

// Deleting: the most useful voters to remove first.
Counts deleting_fill(const Counts& avail, const Scores& base, long registered, long total) {
  constexpr long kAny = std::numeric_limits<long>::max();
  Counts x{};
  long rem = total;
  long maj = maj_of(registered - total);
  take(x, avail, kCEarly, rem, kAny);
  take(x, avail, kCLate, rem, kAny);
  long lower_gamma = base.c_prev - x[kCEarly] - maj + 1;  // both-early deletions needed
  long upper_beta = base.d - base.c + x[kCEarly] + x[kCLate];  // d-only deletions <= this
  long zcap = std::min(avail[kDOnly], std::max(0L, upper_beta));
  long ee = std::max({0L, lower_gamma, rem - avail[kNeither] - avail[kBothLate] - zcap});
  take(x, avail, kBothEarly, rem, ee);
  take(x, avail, kNeither, rem, kAny);
  take(x, avail, kBothLate, rem, kAny);
  take(x, avail, kDOnly, rem, kAny);
  take(x, avail, kBothEarly, rem, kAny);
  return x;
}

Scores deleting_scores(const Scores& base, const Counts& x) {
  Scores s = base;
  s.d -= x[kDOnly] + x[kBothLate] + x[kBothEarly];
  s.c -= x[kBothLate] + x[kBothEarly] + x[kCLate] + x[kCEarly];
  s.c_prev -= x[kBothEarly] + x[kCEarly];
  return s;
}

template <class KindOf>
std::vector<std::uint32_t> pick_voters(std::size_t count, KindOf kind_of,
                                       const std::vector<long>& want_per_kind) {
  std::vector<long> left = want_per_kind;
  std::vector<std::uint32_t> out;
  for (std::size_t v = 0; v < count; ++v) {
    auto k = kind_of(v);
    if (left[k] > 0) {
      --left[k];
      out.push_back(static_cast<std::uint32_t>(v));
    }
  }
  return out;
}

enum class Mode { Add, Delete };

PolyResult run(Mode mode, const Election& e, std::span<const FallbackVote> pool, CandidateId c,
               std::size_t budget) {
  const std::size_t m = e.candidate_count();
  if (c >= m) throw ArgumentError("distinguished candidate out of range");
  for (const auto& v : pool)
    for (CandidateId x : v.approved())
      if (x >= m) throw ArgumentError("pool vote names unknown candidate");

  PolyResult out;
  auto& res = out.result;
  auto& trace = out.trace.records;
  const WitnessKind wkind = mode == Mode::Add ? WitnessKind::AddedVoters : WitnessKind::DeletedVoters;

  ++res.nodes_explored;
  WinnerReport initial = fallback_winners(e);
  if (!initial.is_unique_winner(c)) {
    trace.push_back({StageKind::Initial, 0, c, Check::None, true});
    res.yes = true;
    res.witness = Witness{wkind, {}};
    return out;
  }
  trace.push_back({StageKind::Initial, 0, c, Check::NoEarlierMajority, false});

  const long n = static_cast<long>(e.voter_count());
  // Voters whose kinds matter: the pool when adding, the registered voters when deleting.
  std::span<const FallbackVote> movable = mode == Mode::Add ? pool : e.votes();
  const long moves = static_cast<long>(std::min<std::size_t>(budget, movable.size()));
  Positions reg(m, e.votes());
  Positions mov(m, movable);

  std::size_t top = 0;
  for (const auto& v : e.votes()) top = std::max(top, v.length());
  for (const auto& v : pool) top = std::max(top, v.length());

  auto succeed = [&](std::vector<std::uint32_t> members) {
    res.yes = true;
    res.witness = Witness{wkind, std::move(members)};
  };

  for (std::size_t level = 1; level <= top; ++level) {
    for (CandidateId d = 0; d < m; ++d) {
      if (d == c) continue;
      ++res.nodes_explored;
      Scores base;
      for (std::size_t v = 0; v < e.voter_count(); ++v) {
        std::size_t pc = reg.at(v, c);
        base.d += within(reg.at(v, d), level) ? 1 : 0;
        base.c += within(pc, level) ? 1 : 0;
        base.c_prev += within(pc, level - 1) ? 1 : 0;
      }
      Counts avail{};
      for (std::size_t v = 0; v < movable.size(); ++v) ++avail[classify(mov.at(v, c), mov.at(v, d), level)];

      Check last = Check::None;
      for (long t = 0; t <= moves; ++t) {
        Counts x = mode == Mode::Add ? adding_fill(avail, base, n, t) : deleting_fill(avail, base, n, t);
        Scores s = mode == Mode::Add ? adding_scores(base, x) : deleting_scores(base, x);
        long maj = maj_of(mode == Mode::Add ? n + t : n - t);
        last = majority_check(s, maj);
        if (last != Check::None) continue;
        trace.push_back({StageKind::Majority, level, d, Check::None, true});
        std::vector<long> want(x.begin(), x.end());
        succeed(pick_voters(movable.size(),
                            [&](std::size_t v) { return classify(mov.at(v, c), mov.at(v, d), level); },
                            want));
        return out;
      }
      trace.push_back({StageKind::Majority, level, d, last, false});
    }
  }

  // Approval stage.
  const long app_c0 = static_cast<long>(approval_score(e, c));
  for (CandidateId d = 0; d < m; ++d) {
    if (d == c) continue;
    ++res.nodes_explored;
    const long app_d0 = static_cast<long>(approval_score(e, d));
    ACounts avail{};
    for (std::size_t v = 0; v < movable.size(); ++v)
      ++avail[classify_approval(mov.at(v, c), mov.at(v, d))];
    Check last = Check::None;
    for (long t = 0; t <= moves; ++t) {
      ACounts x{};
      long rem = t;
      // Adding: rival-only, neither, both, c-only. Deleting: c-only, both, neither, rival-only.
      const std::array<AKind, 4> order = mode == Mode::Add
                                             ? std::array<AKind, 4>{kAD, kANone, kABoth, kAC}
                                             : std::array<AKind, 4>{kAC, kABoth, kANone, kAD};
      for (AKind k : order) {
        long take_k = std::min(avail[k], rem);
        x[k] = take_k;
        rem -= take_k;
      }
      long app_c, app_d, maj;
      if (mode == Mode::Add) {
        app_c = app_c0 + x[kABoth] + x[kAC];
        app_d = app_d0 + x[kABoth] + x[kAD];
        maj = maj_of(n + t);
      } else {
        app_c = app_c0 - x[kABoth] - x[kAC];
        app_d = app_d0 - x[kABoth] - x[kAD];
        maj = maj_of(n - t);
      }
      last = approval_check(app_c, app_d, maj);
      if (last != Check::None) continue;
      trace.push_back({StageKind::Approval, 0, d, Check::None, true});
      std::vector<long> want(x.begin(), x.end());
      succeed(pick_voters(movable.size(),
                          [&](std::size_t v) { return classify_approval(mov.at(v, c), mov.at(v, d)); },
                          want));
      return out;
    }
    trace.push_back({StageKind::Approval, 0, d, last, false});
  }
  return out;
}

}  // namespace

PolyResult dcav_fallback(const Election& registered, std::span<const FallbackVote> pool,
                         CandidateId c, std::size_t budget) {
  return run(Mode::Add, registered, pool, c, budget);
}

PolyResult dcdv_fallback(const Election& registered, CandidateId c, std::size_t budget) {
  return run(Mode::Delete, registered, {}, c, budget);
}

PolyResult solve_poly(const ControlInstance& inst) {
  inst.validate();
  const auto& t = inst.type;
  if (t.direction != Direction::Destructive ||
      (t.action != ControlAction::AddVoters && t.action != ControlAction::DeleteVoters))
    throw ArgumentError("the polynomial engine only handles dcav and dcdv, not " + t.code());
  if (t.action == ControlAction::AddVoters)
    return dcav_fallback(inst.election, inst.pool, inst.distinguished, *inst.budget);
  return dcdv_fallback(inst.election, inst.distinguished, *inst.budget);
}

}  // namespace bvc
