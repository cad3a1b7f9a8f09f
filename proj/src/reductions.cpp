#include "bvc/reductions.hpp"

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>

#include "bvc/errors.hpp"

namespace bvc {

namespace {

using Ids = std::vector<CandidateId>;

Ids unite(std::initializer_list<Ids> parts) {
  Ids out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Ids minus(const Ids& a, const Ids& b) {
  Ids out;
  for (auto x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  return out;
}

Ids one(CandidateId c) { return {c}; }

Ids pick(const Ids& from, const std::vector<std::uint32_t>& idx) {
  Ids out;
  for (auto i : idx) out.push_back(from[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string name_of(const std::string& prefix, std::size_t i) { return prefix + std::to_string(i + 1); }

// Allocates candidate ids in call order; inside every block of a vote the
// candidates appear in ascending id order.
class Builder {
 public:
  explicit Builder(std::string family) { meta_.family = std::move(family); }

  Ids group(const std::string& name, std::size_t size, const std::string& prefix) {
    Ids ids;
    for (std::size_t i = 0; i < size; ++i) {
      ids.push_back(next_++);
      meta_.candidate_names.push_back(name_of(prefix, i));
    }
    meta_.groups.push_back({name, ids});
    return ids;
  }

  CandidateId single(const std::string& name) {
    CandidateId id = next_++;
    meta_.candidate_names.push_back(name);
    meta_.groups.push_back({name, {id}});
    return id;
  }

  // Consecutive disjoint chunks of `from`, recorded as name_1, name_2, ...
  std::vector<Ids> carve(const Ids& from, const std::vector<std::size_t>& sizes,
                         const std::string& name) {
    std::vector<Ids> out;
    std::size_t at = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (at + sizes[i] > from.size()) throw std::logic_error("carving past the end of " + name);
      Ids chunk(from.begin() + static_cast<long>(at), from.begin() + static_cast<long>(at + sizes[i]));
      at += sizes[i];
      meta_.subgroups.push_back({name + "_" + std::to_string(i + 1), chunk});
      out.push_back(std::move(chunk));
    }
    return out;
  }

  void subgroup(const std::string& name, Ids members) { meta_.subgroups.push_back({name, std::move(members)}); }

  void add(int row, std::optional<std::size_t> index, std::size_t copies,
           std::initializer_list<Ids> blocks, bool pool = false) {
    std::vector<CandidateId> list;
    for (const auto& b : blocks) {
      Ids sorted = b;
      std::sort(sorted.begin(), sorted.end());
      list.insert(list.end(), sorted.begin(), sorted.end());
    }
    auto& target = pool ? pool_ : votes_;
    auto& groups = pool ? meta_.pool_groups : meta_.voter_groups;
    groups.push_back({row, index, target.size(), copies});
    for (std::size_t i = 0; i < copies; ++i) target.emplace_back(list);
  }

  void param(const std::string& key, long value) { meta_.parameters[key] = value; }

  Reduction finish(ControlType type, const Ids& spoilers, CandidateId distinguished,
                   std::optional<std::size_t> budget, bool full_rankings) {
    const std::size_t m = next_;
    if (full_rankings) {
      for (const auto* list : {&votes_, &pool_})
        for (const auto& v : *list)
          if (v.length() != m) throw std::logic_error(meta_.family + ": a vote does not rank every candidate");
    }
    Reduction r;
    r.instance.type = type;
    r.instance.election = Election(m, std::move(votes_));
    r.instance.qualified = CandidateSet::full(m);
    for (auto c : spoilers) r.instance.qualified.erase(c);
    r.instance.distinguished = distinguished;
    r.instance.budget = budget;
    r.instance.pool = std::move(pool_);
    r.instance.validate();
    r.meta = std::move(meta_);
    return r;
  }

 private:
  CandidateId next_ = 0;
  std::vector<FallbackVote> votes_;
  std::vector<FallbackVote> pool_;
  ConstructionMeta meta_;
};

struct Neighborhoods {
  Ids b;                  // candidate ids of the vertices
  std::vector<Ids> nbr;   // N[b_i] as candidate ids
  std::size_t total = 0;  // sum of |N[b_i]|
};

Neighborhoods neighborhoods(const Graph& g, const Ids& b) {
  Neighborhoods out;
  out.b = b;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Ids ids;
    for (Vertex u : closed_neighborhood(g, v)) ids.push_back(b[u]);
    out.total += ids.size();
    out.nbr.push_back(std::move(ids));
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

// Pads a source solution with the lowest unused elements until it has `size` entries.
std::vector<std::uint32_t> pad(std::vector<std::uint32_t> sol, std::size_t size, std::size_t universe) {
  std::sort(sol.begin(), sol.end());
  for (std::uint32_t x = 0; x < universe && sol.size() < size; ++x)
    if (!std::binary_search(sol.begin(), sol.end(), x)) {
      sol.push_back(x);
      std::sort(sol.begin(), sol.end());
    }
  return sol;
}

}  // namespace

const CandidateGroup& ConstructionMeta::group(std::string_view name) const {
  for (const auto* list : {&groups, &subgroups})
    for (const auto& g : *list)
      if (g.name == name) return g;
  throw ArgumentError("no candidate group named " + std::string(name));
}

CandidateId ConstructionMeta::candidate(std::string_view name) const {
  for (std::size_t i = 0; i < candidate_names.size(); ++i)
    if (candidate_names[i] == name) return static_cast<CandidateId>(i);
  throw ArgumentError("no candidate named " + std::string(name));
}

namespace {

std::vector<VoterIndex> collect(const std::vector<VoterGroup>& groups, int row,
                                std::optional<std::size_t> index) {
  std::vector<VoterIndex> out;
  for (const auto& g : groups) {
    if (g.row != row || (index && g.index != index)) continue;
    for (std::size_t i = 0; i < g.count; ++i) out.push_back(static_cast<VoterIndex>(g.first + i));
  }
  return out;
}

}  // namespace

std::vector<VoterIndex> ConstructionMeta::voters(int row, std::optional<std::size_t> index) const {
  return collect(voter_groups, row, index);
}

std::vector<VoterIndex> ConstructionMeta::pool_voters(int row, std::optional<std::size_t> index) const {
  return collect(pool_groups, row, index);
}

// ---------------------------------------------------------------------------
// Deleting candidates, constructive. Distinguished w, budget k, 1 <= k < n.

Reduction ds_to_bv_delete_candidates(const Graph& g, std::size_t k, Direction dir) {
  const std::size_t n = g.vertex_count();
  if (dir == Direction::Destructive) {
    require(k >= 1 && k <= n && n >= 3, "dcdc needs 1 <= k <= n and n >= 3");
    Builder bld("ds-dcdc");
    Ids b = bld.group("B", n, "b");
    Ids m1 = bld.group("M1", k, "p");
    Ids m2 = bld.group("M2", k, "q");
    Ids m3 = bld.group("M3", k, "r");
    auto nb = neighborhoods(g, b);
    Ids x = bld.group("X", n * n - nb.total, "x");
    Ids y = bld.group("Y", n - 1, "y");
    Ids z = bld.group("Z", n - 2, "z");
    CandidateId w = bld.single("w");
    CandidateId c = bld.single("c");
    std::vector<std::size_t> xs;
    for (const auto& nbr : nb.nbr) xs.push_back(n - nbr.size());
    auto xi = bld.carve(x, xs, "X");
    for (std::size_t i = 0; i < n; ++i)
      bld.add(1, i, 1,
              {nb.nbr[i], xi[i], one(w), m1,
               unite({minus(b, nb.nbr[i]), m2, m3, minus(x, xi[i]), y, z}), one(c)});
    bld.add(2, std::nullopt, n, {y, one(c), m2, unite({b, m1, m3, x, z, one(w)})});
    bld.add(3, std::nullopt, 1, {z, one(w), one(c), m3, unite({b, m1, m2, x, y})});
    bld.param("n", static_cast<long>(n));
    bld.param("k", static_cast<long>(k));
    return bld.finish({ControlAction::DeleteCandidates, Direction::Destructive, std::nullopt}, {}, c, k, true);
  }

  require(k >= 1 && k < n, "ccdc needs 1 <= k < n");
  Builder bld("ds-ccdc");
  // B comes after the padding so mixed blocks list it last.
  std::size_t nbr_total = 0;
  for (Vertex v = 0; v < n; ++v) nbr_total += closed_neighborhood(g, v).size();
  Ids d = bld.group("D", k + 1, "d");
  Ids x = bld.group("X", n * (n + k) - nbr_total, "x");
  Ids y = bld.group("Y", n * (k + 1), "y");
  Ids b = bld.group("B", n, "b");
  auto nb = neighborhoods(g, b);
  CandidateId w = bld.single("w");
  std::vector<std::size_t> xs;
  for (const auto& nbr : nb.nbr) xs.push_back(n + k - nbr.size());
  auto xi = bld.carve(x, xs, "X");
  auto yj = bld.carve(y, std::vector<std::size_t>(k + 1, n), "Y");
  // Each row opens its tail with the next row's X block, so the tail head
  // that slides forward under deletions is different for every row.
  for (std::size_t i = 0; i < n; ++i) {
    const Ids& next = xi[(i + 1) % n];
    bld.add(1, i, 1,
            {nb.nbr[i], xi[i], one(w), next, unite({minus(b, nb.nbr[i]), minus(minus(x, xi[i]), next), y}), d});
  }
  for (std::size_t j = 0; j <= k; ++j)
    bld.add(2, j, 1, {yj[j], minus(d, one(d[j])), one(d[j]), unite({b, x, minus(y, yj[j]), one(w)})});
  bld.add(3, std::nullopt, n - k - 1, {d, unite({x, y, one(w)}), b});
  bld.add(4, std::nullopt, 1, {d, one(w), unite({b, x, y})});
  bld.param("n", static_cast<long>(n));
  bld.param("k", static_cast<long>(k));
  return bld.finish({ControlAction::DeleteCandidates, Direction::Constructive, std::nullopt}, {}, w, k, true);
}

// ---------------------------------------------------------------------------
// Adding candidates. The vertices are the spoilers. Constructive target w,
// destructive target c.

Reduction ds_to_bv_add_candidates(const Graph& g, std::size_t k, Direction dir, bool limited) {
  const std::size_t n = g.vertex_count();
  require(n >= 3, "adding-candidate constructions need n >= 3");
  if (limited) require(k >= 1 && k <= n, "limited adding needs 1 <= k <= n");
  std::string fam = std::string(dir == Direction::Constructive ? "ds-cc" : "ds-dc") +
                    (limited ? "ac" : "auc");
  Builder bld(fam);
  Ids b = bld.group("B", n, "b");
  Ids x = bld.group("X", n - 1, "x");
  Ids y = bld.group("Y", n - 2, "y");
  Ids z = bld.group("Z", n - 1, "z");
  CandidateId c = bld.single("c");
  CandidateId w = bld.single("w");
  auto nb = neighborhoods(g, b);
  // Destructive: doubled rows 1 and 2, so a single undominated vertex keeps c
  // strictly ahead of w at level n instead of tying.
  const std::size_t rep = dir == Direction::Destructive ? 2 : 1;
  for (std::size_t i = 0; i < n; ++i)
    bld.add(1, i, rep, {nb.nbr[i], x, one(c), unite({minus(b, nb.nbr[i]), y, z, one(w)})});
  bld.add(2, std::nullopt, rep * n, {y, one(c), one(w), unite({b, x, z})});
  bld.add(3, std::nullopt, 1, {z, one(w), one(c), unite({b, x, y})});
  bld.param("n", static_cast<long>(n));
  bld.param("k", static_cast<long>(k));
  ControlType t{limited ? ControlAction::AddCandidatesLimited : ControlAction::AddCandidatesUnlimited, dir,
                std::nullopt};
  std::optional<std::size_t> budget;
  if (limited) budget = k;
  return bld.finish(t, b, dir == Direction::Constructive ? w : c, budget, true);
}

// ---------------------------------------------------------------------------
// Adding voters, constructive, target w. Needs k >= 2: the k-1 registered
// voters are the only ones putting c first.

Reduction ds_to_bv_add_voters(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  require(k >= 2 && k <= n, "ccav needs 2 <= k <= n");
  Builder bld("ds-ccav");
  Ids b = bld.group("B", n, "b");
  auto nb = neighborhoods(g, b);
  Ids x = bld.group("X", nb.total, "x");
  Ids y = bld.group("Y", n, "y");
  CandidateId c = bld.single("c");
  CandidateId w = bld.single("w");
  std::vector<std::size_t> xs;
  for (const auto& nbr : nb.nbr) xs.push_back(nbr.size());
  auto xi = bld.carve(x, xs, "X");
  bld.add(1, std::nullopt, k - 1, {one(c), y, b, one(w), x});
  for (std::size_t i = 0; i < n; ++i)
    bld.add(2, i, 1, {minus(b, nb.nbr[i]), xi[i], one(w), one(c), unite({nb.nbr[i], minus(x, xi[i]), y})},
            true);
  bld.param("n", static_cast<long>(n));
  bld.param("k", static_cast<long>(k));
  return bld.finish({ControlAction::AddVoters, Direction::Constructive, std::nullopt}, {}, w, k, true);
}

// ---------------------------------------------------------------------------
// Deleting voters, constructive, target w.

Reduction ds_to_bv_delete_voters(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  require(n >= 2 && k >= 1 && k <= n, "ccdv needs n >= 2 and 1 <= k <= n");
  Builder bld("ds-ccdv");
  Ids b = bld.group("B", n, "b");
  auto nb = neighborhoods(g, b);
  Ids x = bld.group("X", n * n - nb.total, "x");
  Ids y = bld.group("Y", nb.total, "y");
  Ids z = bld.group("Z", (k - 1) * (n + 1), "z");
  CandidateId c = bld.single("c");
  CandidateId w = bld.single("w");
  std::vector<std::size_t> xs, ys;
  for (const auto& nbr : nb.nbr) {
    xs.push_back(n - nbr.size());
    ys.push_back(nbr.size());
  }
  auto xi = bld.carve(x, xs, "X");
  auto yi = bld.carve(y, ys, "Y");
  auto zj = bld.carve(z, std::vector<std::size_t>(k - 1, n + 1), "Z");
  for (std::size_t i = 0; i < n; ++i)
    bld.add(1, i, 1, {nb.nbr[i], one(c), xi[i], unite({minus(b, nb.nbr[i]), minus(x, xi[i]), y, z}), one(w)});
  for (std::size_t i = 0; i < n; ++i)
    bld.add(2, i, 1,
            {minus(b, nb.nbr[i]), yi[i], one(w), unite({nb.nbr[i], x, minus(y, yi[i]), z, one(c)})});
  for (std::size_t j = 0; j + 1 < k; ++j)
    bld.add(3, j, 1, {one(c), zj[j], unite({b, x, y, minus(z, zj[j])}), one(w)});
  bld.param("n", static_cast<long>(n));
  bld.param("k", static_cast<long>(k));
  return bld.finish({ControlAction::DeleteVoters, Direction::Constructive, std::nullopt}, {}, w, k, true);
}

// ---------------------------------------------------------------------------
// Destructive partition of voters, ties eliminate, target c.

Reduction ds_to_bv_destructive_voter_partition(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  require(k >= 1 && k <= n, "dcpv-te needs 1 <= k <= n");
  Builder bld("ds-dcpv-te");
  Ids b = bld.group("B", n, "b");
  auto nb = neighborhoods(g, b);
  Ids d = bld.group("D", (k - 1) * (n + 4), "d");
  Ids e = bld.group("E", 2 * (k + n), "e");
  Ids f = bld.group("F", 3 * n, "f");
  Ids h = bld.group("H", n * n, "h");
  CandidateId c = bld.single("c");
  CandidateId u = bld.single("u");
  CandidateId v = bld.single("v");
  CandidateId w = bld.single("w");
  CandidateId xc = bld.single("x");
  CandidateId yc = bld.single("y");
  auto dj = bld.carve(d, std::vector<std::size_t>(k - 1, n + 4), "D");
  auto el = bld.carve(e, std::vector<std::size_t>(k + n, 2), "E");
  auto fi = bld.carve(f, std::vector<std::size_t>(n, 3), "F");
  std::vector<std::size_t> hs;
  for (const auto& nbr : nb.nbr) hs.push_back(nbr.size());
  auto hi = bld.carve(h, hs, "H");
  for (std::size_t i = 0; i < n; ++i)
    bld.add(1, i, 1,
            {fi[i], minus(b, nb.nbr[i]), hi[i], one(yc), one(w),
             unite({nb.nbr[i], d, e, minus(f, fi[i]), minus(h, hi[i])}), one(u), one(v), one(c), one(xc)});
  bld.add(2, std::nullopt, 1, {one(xc), one(w), one(c), b, one(u), one(v), unite({d, e, f, h}), one(yc)});
  for (std::size_t j = 0; j + 1 < k; ++j)
    bld.add(3, j, 1,
            {one(xc), dj[j], unite({b, minus(d, dj[j]), e, f, h}), one(u), one(v), one(yc), one(w), one(c)});
  for (std::size_t l = 0; l < k + n; ++l)
    bld.add(4, l, 1,
            {one(c), el[l], one(xc), one(yc), unite({b, d, minus(e, el[l]), f, h}), one(u), one(v), one(w)});
  bld.param("n", static_cast<long>(n));
  bld.param("k", static_cast<long>(k));
  return bld.finish({ControlAction::PartitionVoters, Direction::Destructive, TieRule::TE}, {}, c, std::nullopt,
                    true);
}

// ---------------------------------------------------------------------------

std::string PartitionVariant::code() const {
  return ControlType{runoff ? ControlAction::RunoffPartitionCandidates : ControlAction::PartitionCandidates,
                     direction, tie}
      .code();
}

std::vector<PartitionVariant> PartitionVariant::all() {
  std::vector<PartitionVariant> out;
  for (Direction d : {Direction::Constructive, Direction::Destructive})
    for (bool runoff : {false, true})
      for (TieRule t : {TieRule::TE, TieRule::TP}) out.push_back({runoff, t, d});
  return out;
}

namespace {

Ids element_ids(const SetSystem& s, std::size_t i, const Ids& b) {
  Ids out;
  for (auto x : s.subsets[i]) out.push_back(b[x]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Reduction rhs_to_bv_candidate_partition(const SetSystem& s, std::size_t k, PartitionVariant var) {
  s.validate();
  require(is_rhs_valid(s, k), "restricted hitting set needs n > m > k > 1");
  const std::size_t m = s.base_size;
  const std::size_t n = s.subsets.size();
  Builder bld("rhs-partition");
  Ids b = bld.group("B", m, "b");
  CandidateId c = bld.single("c");
  CandidateId d = bld.single("d");
  CandidateId w = bld.single("w");
  bld.add(1, std::nullopt, 2 * m + 1, {one(c), one(d), b, one(w)});
  bld.add(2, std::nullopt, 2 * n + 2 * k * (n - 1) + 3, {one(c), one(w), one(d), b});
  bld.add(3, std::nullopt, 2 * n * (k + 1) + 5, {one(w), one(c), one(d), b});
  for (std::size_t i = 0; i < n; ++i) {
    Ids si = element_ids(s, i, b);
    bld.add(4, i, 2 * (k + 1), {one(d), si, one(c), one(w), minus(b, si)});
  }
  for (std::size_t j = 0; j < m; ++j)
    bld.add(5, j, 2, {one(d), one(b[j]), one(w), one(c), minus(b, one(b[j]))});
  bld.add(6, std::nullopt, 2 * (k + 1), {one(d), one(w), one(c), b});
  bld.param("n", static_cast<long>(n));
  bld.param("m", static_cast<long>(m));
  bld.param("k", static_cast<long>(k));
  ControlType t{var.runoff ? ControlAction::RunoffPartitionCandidates : ControlAction::PartitionCandidates,
                var.direction, var.tie};
  return bld.finish(t, {}, var.direction == Direction::Constructive ? w : c, std::nullopt, true);
}

// ---------------------------------------------------------------------------
// Fallback voting, destructive partition of voters with ties promoting.

Reduction rhs_to_fv_destructive_voter_partition(const SetSystem& s, std::size_t k) {
  s.validate();
  require(is_rhs_valid(s, k), "restricted hitting set needs n > m > k > 1");
  const std::size_t m = s.base_size;
  const std::size_t n = s.subsets.size();
  Builder bld("rhs-fv-dcpv-tp");
  Ids b = bld.group("B", m, "b");
  Ids d = bld.group("D", 2 * (m + 1), "d");
  Ids e = bld.group("E", 2 * (m - 1), "e");
  CandidateId c = bld.single("c");
  CandidateId w = bld.single("w");
  for (std::size_t i = 0; i < n; ++i) bld.add(1, i, k + 1, {one(w), element_ids(s, i, b), one(c)});
  for (std::size_t j = 0; j < m; ++j) bld.add(2, j, 1, {one(c), one(b[j]), one(w)});
  for (std::size_t j = 0; j < m; ++j) bld.add(3, j, k - 1, {one(b[j])});
  for (std::size_t p = 0; p <= m; ++p) bld.add(4, p, 1, {one(d[2 * p]), one(d[2 * p + 1]), one(w)});
  for (std::size_t r = 0; r < e.size(); ++r) bld.add(5, r, 1, {one(e[r])});
  bld.add(6, std::nullopt, n * (k + 1) + m - k + 1, {one(c)});
  bld.add(7, std::nullopt, m * k + k - 1, {one(c), one(w)});
  bld.add(8, std::nullopt, 1, {one(w), one(c)});
  bld.param("n", static_cast<long>(n));
  bld.param("m", static_cast<long>(m));
  bld.param("k", static_cast<long>(k));
  return bld.finish({ControlAction::PartitionVoters, Direction::Destructive, TieRule::TP}, {}, c, std::nullopt,
                    false);
}

// ---------------------------------------------------------------------------
// Exact cover by 3-sets, constructive partition of voters, target w.

Reduction x3c_to_bv_voter_partition(const SetSystem& s, TieRule tie) {
  s.validate();
  require(is_x3c_valid(s), "exact cover needs |B| = 3m with m > 1 and 3-element sets");
  const std::size_t m = s.base_size / 3;
  const std::size_t n = s.subsets.size();
  require(n >= 1, "exact cover needs at least one set");
  Builder bld(tie == TieRule::TE ? "x3c-ccpv-te" : "x3c-ccpv-tp");
  Ids b = bld.group("B", 3 * m, "b");
  // l_j: number of sets containing b_j; B_i = {b_j : i <= n - l_j} for 1-based i
  std::vector<std::size_t> ell(3 * m, 0);
  for (const auto& set : s.subsets)
    for (auto x : set) ++ell[x];
  std::vector<Ids> bi(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 3 * m; ++j)
      if (i + 1 + ell[j] <= n) bi[i].push_back(b[j]);
  Ids d = bld.group("D", 3 * n * m, "d");
  Ids e = bld.group("E", (3 * m - 1) * (m + 1), "e");
  Ids f = bld.group("F", (3 * m + 1) * (m - 1), "f");
  Ids gg = bld.group("G", n * (3 * m - 3), "g");
  CandidateId c = bld.single("c");
  CandidateId w = bld.single("w");
  CandidateId x = bld.single("x");
  std::vector<std::size_t> ds;
  for (const auto& set : bi) ds.push_back(3 * m - set.size());
  auto di = bld.carve(d, ds, "D");
  auto ek = bld.carve(e, std::vector<std::size_t>(m + 1, 3 * m - 1), "E");
  auto fl = bld.carve(f, std::vector<std::size_t>(m - 1, 3 * m + 1), "F");
  auto gi = bld.carve(gg, std::vector<std::size_t>(n, 3 * m - 3), "G");
  for (std::size_t i = 0; i < n; ++i) bld.subgroup("Bsub_" + std::to_string(i + 1), bi[i]);
  for (std::size_t i = 0; i < n; ++i) {
    Ids si = element_ids(s, i, b);
    bld.add(1, i, 1, {one(c), si, gi[i], minus(gg, gi[i]), f, d, e, minus(b, si), one(w), one(x)});
  }
  for (std::size_t i = 0; i < n; ++i)
    bld.add(2, i, 1, {bi[i], di[i], one(w), gg, e, minus(d, di[i]), f, minus(b, bi[i]), one(c), one(x)});
  for (std::size_t q = 0; q <= m; ++q)
    bld.add(3, q, 1, {one(x), one(c), ek[q], f, minus(e, ek[q]), gg, d, b, one(w)});
  for (std::size_t l = 0; l + 1 < m; ++l)
    bld.add(4, l, 1, {fl[l], one(c), minus(f, fl[l]), gg, d, e, b, one(w), one(x)});
  bld.param("n", static_cast<long>(n));
  bld.param("m", static_cast<long>(m));
  return bld.finish({ControlAction::PartitionVoters, Direction::Constructive, tie}, {}, w, std::nullopt, true);
}

// ---------------------------------------------------------------------------

HsToRhs hs_to_rhs(const SetSystem& s, std::size_t k) {
  s.validate();
  const std::size_t m = s.base_size;
  const std::size_t n = s.subsets.size();
  require(k >= 1 && k <= m, "hitting set needs 1 <= k <= |B|");
  HsToRhs out;
  out.k = k;
  bool has_empty = std::any_of(s.subsets.begin(), s.subsets.end(), [](const auto& x) { return x.empty(); });
  if (k == 1 || k == m || has_empty) {
    out.direct_answer = solve_hitting_set(s, k).has_value();
    return out;
  }
  SetSystem t = s;
  if (n <= m) {
    // one fresh element a, hit only by itself
    std::uint32_t a = static_cast<std::uint32_t>(m);
    t.base_size = m + 1;
    for (std::size_t i = 0; i < m - n + 2; ++i) t.subsets.push_back({a});
    out.k = k + 1;
  }
  out.sets = std::move(t);
  return out;
}

// ---------------------------------------------------------------------------

Witness forward_witness(const Reduction& r, const std::vector<std::uint32_t>& sol) {
  const auto& fam = r.meta.family;
  const auto& meta = r.meta;
  auto param = [&](const char* key) { return static_cast<std::size_t>(meta.parameters.at(key)); };
  auto as_candidates = [&](const std::vector<std::uint32_t>& idx) {
    return pick(meta.group("B").members, idx);
  };
  auto sorted = [](std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };

  if (fam == "ds-ccdc" || fam == "ds-dcdc") return {WitnessKind::DeletedCandidates, as_candidates(sol)};
  if (fam == "ds-ccac" || fam == "ds-dcac" || fam == "ds-ccauc" || fam == "ds-dcauc")
    return {WitnessKind::AddedCandidates, as_candidates(sol)};
  if (fam == "ds-ccav") {
    std::vector<std::uint32_t> out;
    for (auto i : pad(sol, param("k"), param("n")))
      for (auto v : meta.pool_voters(2, i)) out.push_back(v);
    return {WitnessKind::AddedVoters, sorted(out)};
  }
  if (fam == "ds-ccdv") {
    std::vector<std::uint32_t> out;
    for (auto i : pad(sol, param("k"), param("n")))
      for (auto v : meta.voters(1, i)) out.push_back(v);
    return {WitnessKind::DeletedVoters, sorted(out)};
  }
  if (fam == "ds-dcpv-te") {
    std::vector<std::uint32_t> out;
    for (auto i : pad(sol, param("k"), param("n")))
      for (auto v : meta.voters(1, i)) out.push_back(v);
    for (int row : {2, 3})
      for (auto v : meta.voters(row)) out.push_back(v);
    return {WitnessKind::VoterBipartition, sorted(out)};
  }
  if (fam == "rhs-partition") {
    auto chosen = as_candidates(pad(sol, param("k"), param("m")));
    for (const char* s : {"c", "d", "w"}) chosen.push_back(meta.candidate(s));
    return {WitnessKind::CandidateBipartition, sorted(chosen)};
  }
  if (fam == "rhs-fv-dcpv-tp") {
    std::vector<std::uint32_t> out;
    for (auto j : pad(sol, param("k"), param("m")))
      for (int row : {2, 3})
        for (auto v : meta.voters(row, j)) out.push_back(v);
    return {WitnessKind::VoterBipartition, sorted(out)};
  }
  if (fam == "x3c-ccpv-te" || fam == "x3c-ccpv-tp") {
    std::vector<std::uint32_t> out;
    for (auto i : sol)
      for (auto v : meta.voters(1, i)) out.push_back(v);
    for (auto v : meta.voters(3)) out.push_back(v);
    return {WitnessKind::VoterBipartition, sorted(out)};
  }
  throw ArgumentError("no witness map for family " + fam);
}

// ---------------------------------------------------------------------------

namespace {

struct FamilyName {
  Family family;
  const char* id;
};

constexpr FamilyName kFamilies[] = {
    {Family::DsCcdc, "ds-ccdc"},         {Family::DsDcdc, "ds-dcdc"},
    {Family::DsCcac, "ds-ccac"},         {Family::DsDcac, "ds-dcac"},
    {Family::DsCcauc, "ds-ccauc"},       {Family::DsDcauc, "ds-dcauc"},
    {Family::DsCcav, "ds-ccav"},         {Family::DsCcdv, "ds-ccdv"},
    {Family::DsDcpvTe, "ds-dcpv-te"},    {Family::RhsPartition, "rhs-partition"},
    {Family::X3cPv, "x3c-ccpv"},         {Family::RhsFvDcpvTp, "rhs-fv-dcpv-tp"},
    {Family::HsToRhs, "hs-to-rhs"},
};

}  // namespace

std::string family_id(Family f) {
  for (const auto& e : kFamilies)
    if (e.family == f) return e.id;
  return "?";
}

Family parse_family(std::string_view id) {
  for (const auto& e : kFamilies)
    if (id == e.id) return e.family;
  throw ArgumentError("unknown family '" + std::string(id) + "'");
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& e : kFamilies) out.push_back(e.family);
  return out;
}

bool is_graph_family(Family f) {
  switch (f) {
    case Family::RhsPartition:
    case Family::X3cPv:
    case Family::RhsFvDcpvTp:
    case Family::HsToRhs:
      return false;
    default:
      return true;
  }
}

bool ds_domain(Family f, std::size_t n, std::size_t k) {
  switch (f) {
    case Family::DsCcdc:
      return k >= 1 && k < n;
    case Family::DsDcdc:
      return n >= 3 && k >= 1 && k <= n;
    case Family::DsCcac:
    case Family::DsDcac:
    case Family::DsCcauc:
    case Family::DsDcauc:
      return n >= 3 && k >= 1 && k <= n;
    case Family::DsCcav:
      return k >= 2 && k <= n;
    case Family::DsCcdv:
      return n >= 2 && k >= 1 && k <= n;
    case Family::DsDcpvTe:
      return k >= 1 && k <= n;
    default:
      return false;
  }
}

Reduction build_ds(Family f, const Graph& g, std::size_t k) {
  switch (f) {
    case Family::DsCcdc:
      return ds_to_bv_delete_candidates(g, k, Direction::Constructive);
    case Family::DsDcdc:
      return ds_to_bv_delete_candidates(g, k, Direction::Destructive);
    case Family::DsCcac:
      return ds_to_bv_add_candidates(g, k, Direction::Constructive, true);
    case Family::DsDcac:
      return ds_to_bv_add_candidates(g, k, Direction::Destructive, true);
    case Family::DsCcauc:
      return ds_to_bv_add_candidates(g, k, Direction::Constructive, false);
    case Family::DsDcauc:
      return ds_to_bv_add_candidates(g, k, Direction::Destructive, false);
    case Family::DsCcav:
      return ds_to_bv_add_voters(g, k);
    case Family::DsCcdv:
      return ds_to_bv_delete_voters(g, k);
    case Family::DsDcpvTe:
      return ds_to_bv_destructive_voter_partition(g, k);
    default:
      throw ArgumentError(family_id(f) + " is not a dominating set family");
  }
}

namespace {

void finish_report(VerifyReport& rep, const Reduction& red, const std::optional<std::vector<std::uint32_t>>& sol,
                   const SolverCaps& caps) {
  SolveResult res = solve(red.instance, caps);
  rep.target_yes = res.yes;
  rep.nodes = res.nodes_explored;
  rep.agree = rep.source_yes == res.yes;
  if (sol) {
    Witness w = forward_witness(red, *sol);
    rep.forward_ok = goal_met(replay(red.instance, w), red.instance.distinguished, red.instance.type.direction);
  }
}

}  // namespace

VerifyReport verify_ds(Family f, const Graph& g, std::size_t k, const SolverCaps& caps) {
  VerifyReport rep;
  rep.family = family_id(f);
  rep.variant = "n=" + std::to_string(g.vertex_count()) + ",k=" + std::to_string(k);
  auto sol = solve_dominating_set(g, k);
  rep.source_yes = sol.has_value();
  if (f == Family::DsCcav && k == 1) {
    // Singleton dominating sets are checked directly.
    rep.direct = true;
    rep.target_yes = rep.source_yes;
    rep.agree = true;
    return rep;
  }
  Reduction red = build_ds(f, g, k);
  finish_report(rep, red, sol, caps);
  return rep;
}

VerifyReport verify_rhs_partition(const SetSystem& s, std::size_t k, PartitionVariant v, const SolverCaps& caps) {
  VerifyReport rep;
  rep.family = family_id(Family::RhsPartition);
  rep.variant = v.code();
  auto sol = solve_hitting_set(s, k);
  rep.source_yes = sol.has_value();
  finish_report(rep, rhs_to_bv_candidate_partition(s, k, v), sol, caps);
  return rep;
}

VerifyReport verify_x3c(const SetSystem& s, TieRule tie, const SolverCaps& caps) {
  VerifyReport rep;
  rep.family = family_id(Family::X3cPv);
  rep.variant = tie == TieRule::TE ? "te" : "tp";
  auto cover = solve_x3c(s);
  rep.source_yes = cover.has_value();
  std::optional<std::vector<std::uint32_t>> sol;
  if (cover) sol.emplace(cover->begin(), cover->end());
  finish_report(rep, x3c_to_bv_voter_partition(s, tie), sol, caps);
  return rep;
}

VerifyReport verify_rhs_fallback(const SetSystem& s, std::size_t k) {
  VerifyReport rep;
  rep.family = family_id(Family::RhsFvDcpvTp);
  rep.variant = "forward";
  rep.partial = true;
  auto sol = solve_hitting_set(s, k);
  rep.source_yes = sol.has_value();
  Reduction red = rhs_to_fv_destructive_voter_partition(s, k);
  if (sol) {
    Witness w = forward_witness(red, *sol);
    rep.forward_ok = goal_met(replay(red.instance, w), red.instance.distinguished, red.instance.type.direction);
    rep.target_yes = *rep.forward_ok;
    rep.agree = *rep.forward_ok;
  } else {
    rep.agree = true;
  }
  rep.note = "partial: only yes-instances are mapped forward; the converse is not exhaustively checked";
  return rep;
}

VerifyReport verify_hs_to_rhs(const SetSystem& s, std::size_t k) {
  VerifyReport rep;
  rep.family = family_id(Family::HsToRhs);
  rep.source_yes = solve_hitting_set(s, k).has_value();
  HsToRhs t = hs_to_rhs(s, k);
  if (t.direct_answer) {
    rep.direct = true;
    rep.target_yes = *t.direct_answer;
  } else {
    rep.target_yes = is_rhs_valid(*t.sets, t.k) && solve_hitting_set(*t.sets, t.k).has_value();
    if (!is_rhs_valid(*t.sets, t.k)) rep.note = "output violates n > m > k > 1";
  }
  rep.agree = rep.source_yes == *rep.target_yes && rep.note.empty();
  return rep;
}

SubelectionAudit audit_subelections(const Reduction& r, bool unique, std::optional<std::uint64_t> samples,
                                    std::uint64_t seed, const SolverCaps& caps) {
  const ControlInstance& inst = r.instance;
  const std::size_t nv = inst.election.voter_count();
  ControlEvaluator ev(inst);
  const CandidateSet all = inst.qualified;
  const CandidateId c = inst.distinguished;
  SubelectionAudit out;
  std::vector<VoterIndex> v1, v2;
  auto check = [&] {
    auto wins = [&](const std::vector<VoterIndex>& part) {
      WinnerReport rep = ev.run(all, part);
      return unique ? rep.is_unique_winner(c) : rep.is_winner(c);
    };
    ++out.checked;
    if (!wins(v1) && !wins(v2)) ++out.violations;
  };
  if (!samples) {
    if (nv >= 63 || nv > caps.exponent_cap) throw CapacityError("too many voters to visit every bipartition");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nv); ++mask) {
      v1.clear();
      v2.clear();
      for (std::size_t i = 0; i < nv; ++i) ((mask >> i) & 1u ? v1 : v2).push_back(static_cast<VoterIndex>(i));
      check();
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> bias(0.0, 1.0);
  for (std::uint64_t q = 0; q < *samples; ++q) {
    std::bernoulli_distribution coin(bias(rng));
    v1.clear();
    v2.clear();
    for (std::size_t i = 0; i < nv; ++i) (coin(rng) ? v1 : v2).push_back(static_cast<VoterIndex>(i));
    check();
  }
  return out;
}

}  // namespace bvc
