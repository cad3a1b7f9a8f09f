#include "bvc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bvc/errors.hpp"
#include "bvc/exact.hpp"
#include "bvc/poly.hpp"
#include "bvc/reductions.hpp"

namespace bvc::cli {

using nlohmann::json;

namespace {

std::string join_names(const std::vector<std::string>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += ", ";
    s += items[i];
  }
  return s;
}

std::string braces(const std::vector<std::string>& items) { return "{" + join_names(items) + "}"; }

json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ArgumentError(path + ": malformed JSON: " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Source instances

struct GraphSource {
  Graph graph;
  std::optional<std::size_t> k;
};

struct SetSource {
  SetSystem sets;
  std::optional<std::size_t> k;
};

GraphSource load_graph(const std::string& path) {
  json j = parse_json_file(path);
  try {
    std::size_t n = j.at("vertices").get<std::size_t>();
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    GraphSource src{Graph(n, edges), std::nullopt};
    if (j.contains("k")) src.k = j.at("k").get<std::size_t>();
    return src;
  } catch (const json::exception& e) {
    throw ArgumentError(path + ": a graph needs \"vertices\" and \"edges\": " + e.what());
  }
}

SetSource load_sets(const std::string& path) {
  json j = parse_json_file(path);
  try {
    SetSource src;
    src.sets.base_size = j.at("base_size").get<std::size_t>();
    src.sets.subsets = j.at("sets").get<std::vector<std::vector<std::uint32_t>>>();
    if (j.contains("k")) src.k = j.at("k").get<std::size_t>();
    src.sets.validate();
    return src;
  } catch (const json::exception& e) {
    throw ArgumentError(path + ": a set system needs \"base_size\" and \"sets\": " + e.what());
  }
}

json sets_json(const SetSystem& s, std::size_t k) {
  return {{"base_size", s.base_size}, {"sets", s.subsets}, {"k", k}};
}

// ---------------------------------------------------------------------------
// Sweep specifications: comma-separated key=value, values "a" or "a..b".

struct Range {
  std::size_t lo = 0, hi = 0;
};

struct Sweep {
  std::map<std::string, Range> ranges;
  std::optional<std::size_t> random;
  std::uint64_t seed = 1;
  double p = 0.5;

  Range get(const std::string& key, Range fallback) const {
    auto it = ranges.find(key);
    return it == ranges.end() ? fallback : it->second;
  }
};

std::size_t parse_count(const std::string& s, const std::string& key) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) throw ArgumentError("sweep value for " + key + " is not a number: " + s);
  return static_cast<std::size_t>(v);
}

Sweep parse_sweep(const std::string& text) {
  Sweep sw;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ArgumentError("sweep entries look like key=value, got " + item);
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "random") {
      sw.random = parse_count(val, key);
    } else if (key == "seed") {
      sw.seed = parse_count(val, key);
    } else if (key == "p") {
      try {
        sw.p = std::stod(val);
      } catch (const std::exception&) {
        throw ArgumentError("sweep value for p is not a number: " + val);
      }
      if (!(sw.p >= 0.0 && sw.p <= 1.0)) throw ArgumentError("p must lie in [0, 1]");
    } else if (key == "n" || key == "m" || key == "k") {
      auto dots = val.find("..");
      Range r;
      if (dots == std::string::npos) {
        r.lo = r.hi = parse_count(val, key);
      } else {
        r.lo = parse_count(val.substr(0, dots), key);
        r.hi = parse_count(val.substr(dots + 2), key);
      }
      if (r.lo > r.hi) throw ArgumentError("empty range for " + key);
      sw.ranges[key] = r;
    } else {
      throw ArgumentError("unknown sweep key " + key);
    }
  }
  return sw;
}

void for_each_graph(const Sweep& sw, const std::function<void(const Graph&)>& f) {
  Range n = sw.get("n", {1, 4});
  std::mt19937_64 rng(sw.seed);
  for (std::size_t v = n.lo; v <= n.hi; ++v) {
    if (sw.random) {
      for (std::size_t i = 0; i < *sw.random; ++i) f(random_graph(v, sw.p, rng));
    } else {
      if (v > 6) throw CapacityError("enumerating every graph stops at 6 vertices; add random=<count>");
      for (const auto& g : all_graphs(v)) f(g);
    }
  }
}

// Multisets of `count` sets drawn from `options`, or random draws.
void for_each_system(std::size_t base, const std::vector<std::vector<std::uint32_t>>& options, Range n,
                     const Sweep& sw, const std::function<void(const SetSystem&)>& f) {
  std::mt19937_64 rng(sw.seed);
  for (std::size_t count = n.lo; count <= n.hi; ++count) {
    if (sw.random) {
      for (std::size_t i = 0; i < *sw.random; ++i) {
        SetSystem s{base, {}};
        for (std::size_t j = 0; j < count; ++j) s.subsets.push_back(options[rng() % options.size()]);
        f(s);
      }
      continue;
    }
    std::vector<std::size_t> pick(count, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t lo) {
      if (pos == count) {
        SetSystem s{base, {}};
        for (auto i : pick) s.subsets.push_back(options[i]);
        f(s);
        return;
      }
      for (std::size_t i = lo; i < options.size(); ++i) {
        pick[pos] = i;
        rec(pos + 1, i);
      }
    };
    rec(0, 0);
  }
}

std::vector<std::vector<std::uint32_t>> all_subsets(std::size_t base) {
  if (base > 6) throw CapacityError("enumerating every subset stops at a 6-element base");
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << base); ++mask) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t e = 0; e < base; ++e)
      if ((mask >> e) & 1u) s.push_back(e);
    out.push_back(s);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> all_triples(std::size_t base) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t a = 0; a < base; ++a)
    for (std::uint32_t b = a + 1; b < base; ++b)
      for (std::uint32_t c = b + 1; c < base; ++c) out.push_back({a, b, c});
  return out;
}

// ---------------------------------------------------------------------------
// Output helpers

std::string percent(std::size_t good, std::size_t total) {
  if (total == 0 || good == total) return "100%";
  double pct = std::floor(1000.0 * static_cast<double>(good) / static_cast<double>(total)) / 10.0;
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(1) << pct << "%";
  return ss.str();
}

struct Tally {
  std::size_t total = 0, agree = 0, forward = 0, forward_ok = 0;
  std::vector<std::string> failures;

  void add(const VerifyReport& r, const std::string& where) {
    ++total;
    if (r.agree) ++agree;
    if (r.forward_ok) {
      ++forward;
      if (*r.forward_ok) ++forward_ok;
    }
    if (!r.agree || (r.forward_ok && !*r.forward_ok)) {
      if (failures.size() < 5) {
        std::string t = r.target_yes ? (*r.target_yes ? "yes" : "no") : "?";
        failures.push_back(where + ": source " + (r.source_yes ? "yes" : "no") + ", target " + t +
                           (r.forward_ok && !*r.forward_ok ? ", mapped witness fails" : ""));
      }
    }
  }
  bool ok() const { return agree == total && forward_ok == forward; }
};

void print_tally(const Tally& t, const std::string& label, std::ostream& out, std::ostream& err) {
  if (t.total == 0) throw ArgumentError("the sweep selects no instances");
  out << "agree: " << percent(t.agree, t.total) << " (" << t.agree << "/" << t.total << ")";
  if (!label.empty()) out << " " << label;
  out << "\n";
  if (t.forward) out << "forward witnesses: " << t.forward_ok << "/" << t.forward << " replay\n";
  for (const auto& f : t.failures) err << "  " << f << "\n";
}

std::string graph_label(const Graph& g, std::size_t k) {
  std::string s = "n=" + std::to_string(g.vertex_count()) + " k=" + std::to_string(k) + " edges=[";
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    s += (i ? " " : "") + std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  return s + "]";
}

std::string sets_label(const SetSystem& s, std::size_t k) {
  std::string out = "m=" + std::to_string(s.base_size) + " k=" + std::to_string(k) + " sets=[";
  for (std::size_t i = 0; i < s.subsets.size(); ++i) {
    out += i ? " {" : "{";
    for (std::size_t j = 0; j < s.subsets[i].size(); ++j) out += (j ? "," : "") + std::to_string(s.subsets[i][j]);
    out += "}";
  }
  return out + "]";
}

PartitionVariant parse_variant(const std::string& code) {
  for (const auto& v : PartitionVariant::all())
    if (v.code() == code) return v;
  throw ArgumentError("unknown partition variant " + code + " (expected e.g. ccpc-te, dcrpc-tp)");
}

std::optional<TieRule> parse_tie(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "te") return TieRule::TE;
  if (s == "tp") return TieRule::TP;
  throw ArgumentError("--tie takes te or tp");
}

// ---------------------------------------------------------------------------
// Commands

struct WinnersOpts {
  std::string file;
  std::string rule = "fallback";
};

int cmd_winners(const WinnersOpts& o, std::ostream& out) {
  ElectionDocument doc = load_document(o.file);
  Election e = to_election(doc);
  WinnerReport r;
  if (o.rule == "bucklin") {
    if (!e.is_bucklin()) throw ArgumentError("bucklin needs every vote to rank all candidates");
    r = bucklin_winners(e);
  } else {
    r = fallback_winners(e);
  }
  out << format_report(r, doc.candidates) << "\n";
  return kYes;
}

struct SolveOpts {
  std::string file;
  std::string control;
  std::string target;
  std::optional<std::size_t> budget;
  std::string pool;
  std::string tie;
  std::string engine = "brute";
  std::string instance;
};

int cmd_solve(SolveOpts o, std::ostream& out) {
  if (!o.instance.empty()) {
    json j = parse_json_file(o.instance);
    try {
      if (o.control.empty() && j.contains("control")) o.control = j.at("control").get<std::string>();
      if (o.target.empty() && j.contains("target")) o.target = j.at("target").get<std::string>();
      if (!o.budget && j.contains("budget")) o.budget = j.at("budget").get<std::size_t>();
    } catch (const json::exception& e) {
      throw ArgumentError(o.instance + ": bad instance descriptor: " + e.what());
    }
  }
  if (o.control.empty()) throw ArgumentError("--control is required");
  if (o.target.empty()) throw ArgumentError("--target is required");

  std::string code = o.control;
  std::transform(code.begin(), code.end(), code.begin(), [](unsigned char ch) { return std::tolower(ch); });
  auto tie = parse_tie(o.tie);
  bool suffixed = code.ends_with("-te") || code.ends_with("-tp");
  if (tie && !suffixed) code += tie == TieRule::TE ? "-te" : "-tp";
  if (tie && suffixed && !code.ends_with(o.tie)) throw ArgumentError("--tie contradicts the control code");

  ElectionDocument doc = load_document(o.file);
  ControlInstance inst;
  inst.type = ControlType::parse(code);
  inst.election = to_election(doc);
  const std::size_t m = doc.candidates.size();
  inst.qualified = CandidateSet::full(m);
  inst.qualified -= spoiler_set(doc);
  inst.distinguished = doc.id_of(o.target);
  inst.pool = pool_votes(doc);
  if (!o.pool.empty()) {
    ElectionDocument extra = doc;
    extra.pool = load_pool(o.pool, doc);
    auto more = pool_votes(extra);
    inst.pool.insert(inst.pool.end(), more.begin(), more.end());
  }
  if (inst.type.has_budget()) {
    if (!o.budget) throw ArgumentError(inst.type.code() + " needs --budget");
    inst.budget = o.budget;
  } else if (o.budget) {
    throw ArgumentError(inst.type.code() + " takes no budget");
  }
  inst.validate();

  SolveResult res;
  if (o.engine == "poly") {
    const bool voters = inst.type.action == ControlAction::AddVoters || inst.type.action == ControlAction::DeleteVoters;
    if (!voters || inst.type.direction != Direction::Destructive)
      throw ArgumentError("the poly engine only handles dcav and dcdv");
    res = solve_poly(inst).result;
  } else if (o.engine == "brute") {
    res = solve(inst, SolverCaps::from_environment());
  } else {
    throw ArgumentError("--engine takes brute or poly");
  }
  if (!res.yes) {
    out << "no\n";
    return kNo;
  }
  out << "yes; " << format_witness(*res.witness, doc, inst.election.voter_count()) << "\n";
  return kYes;
}

json groups_json(const std::vector<CandidateGroup>& groups, const std::vector<std::string>& names) {
  json arr = json::array();
  for (const auto& g : groups) {
    std::vector<std::string> members;
    for (auto c : g.members) members.push_back(names.at(c));
    arr.push_back({{"name", g.name}, {"members", members}});
  }
  return arr;
}

json voter_groups_json(const std::vector<VoterGroup>& groups) {
  json arr = json::array();
  for (const auto& g : groups) {
    json x = {{"row", g.row}, {"first", g.first}, {"count", g.count}};
    if (g.index) x["index"] = *g.index;
    arr.push_back(x);
  }
  return arr;
}

struct ReduceOpts {
  std::string family;
  std::string source;
  std::string out;
  std::string variant = "ccpc-te";
  std::string tie = "te";
};

int cmd_reduce(const ReduceOpts& o, std::ostream& out) {
  Family f = parse_family(o.family);
  if (f == Family::HsToRhs) {
    SetSource src = load_sets(o.source);
    if (!src.k) throw ArgumentError("the hitting set file needs \"k\"");
    HsToRhs t = hs_to_rhs(src.sets, *src.k);
    if (t.direct_answer) {
      out << "answered directly: " << (*t.direct_answer ? "yes" : "no") << "\n";
      return *t.direct_answer ? kYes : kNo;
    }
    write_file(o.out + ".rhs.json", sets_json(*t.sets, t.k).dump(1) + "\n");
    out << "rhs: n=" << t.sets->subsets.size() << " m=" << t.sets->base_size << " k=" << t.k << "\n";
    return kYes;
  }

  Reduction red;
  if (is_graph_family(f)) {
    GraphSource src = load_graph(o.source);
    if (!src.k) throw ArgumentError("the graph file needs \"k\"");
    red = build_ds(f, src.graph, *src.k);
  } else {
    SetSource src = load_sets(o.source);
    switch (f) {
      case Family::RhsPartition:
        if (!src.k) throw ArgumentError("the set system file needs \"k\"");
        red = rhs_to_bv_candidate_partition(src.sets, *src.k, parse_variant(o.variant));
        break;
      case Family::RhsFvDcpvTp:
        if (!src.k) throw ArgumentError("the set system file needs \"k\"");
        red = rhs_to_fv_destructive_voter_partition(src.sets, *src.k);
        break;
      case Family::X3cPv:
        red = x3c_to_bv_voter_partition(src.sets, *parse_tie(o.tie));
        break;
      default:
        throw ArgumentError("unsupported family " + o.family);
    }
  }

  const auto& names = red.meta.candidate_names;
  const ControlInstance& inst = red.instance;
  ElectionDocument doc = make_document(names, inst.election);
  inst.spoilers().for_each([&](CandidateId c) { doc.spoilers.push_back(names[c]); });
  doc.pool = compress_votes(inst.pool, names);
  save_document(doc, o.out + ".election.json");

  json desc = {{"family", red.meta.family}, {"control", inst.type.code()}, {"target", names[inst.distinguished]}};
  if (inst.budget) desc["budget"] = *inst.budget;
  write_file(o.out + ".instance.json", desc.dump(1) + "\n");

  json meta = {{"family", red.meta.family},
               {"parameters", red.meta.parameters},
               {"groups", groups_json(red.meta.groups, names)},
               {"subgroups", groups_json(red.meta.subgroups, names)},
               {"voter_groups", voter_groups_json(red.meta.voter_groups)},
               {"pool_groups", voter_groups_json(red.meta.pool_groups)}};
  write_file(o.out + ".meta.json", meta.dump(1) + "\n");

  out << red.meta.family << ": " << names.size() << " candidates, " << inst.election.voter_count()
      << " registered + " << inst.pool.size() << " unregistered voters; " << inst.type.code() << " target "
      << names[inst.distinguished];
  if (inst.budget) out << " budget " << *inst.budget;
  out << "\n";
  return kYes;
}

struct VerifyOpts {
  std::string family;
  std::string source;
  std::string sweep;
  std::string variant;
  std::string tie;
  std::uint64_t samples = 1000;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out, std::ostream& err) {
  Family f = parse_family(o.family);
  const SolverCaps caps = SolverCaps::from_environment();
  Sweep sw = parse_sweep(o.sweep);
  bool ok = true;

  if (is_graph_family(f)) {
    Tally t;
    auto run = [&](const Graph& g, std::optional<std::size_t> only_k) {
      for (std::size_t k = 0; k <= g.vertex_count(); ++k) {
        if (only_k && k != *only_k) continue;
        const bool direct = f == Family::DsCcav && k == 1 && g.vertex_count() >= 1;
        if (!ds_domain(f, g.vertex_count(), k) && !direct) continue;
        t.add(verify_ds(f, g, k, caps), graph_label(g, k));
      }
    };
    if (!o.source.empty()) {
      GraphSource src = load_graph(o.source);
      if (src.k && !ds_domain(f, src.graph.vertex_count(), *src.k) && !(f == Family::DsCcav && *src.k == 1))
        build_ds(f, src.graph, *src.k);  // throws naming the violated constraint
      run(src.graph, src.k);
    } else {
      for_each_graph(sw, [&](const Graph& g) { run(g, std::nullopt); });
    }
    print_tally(t, "", out, err);
    ok = t.ok();
  } else if (f == Family::RhsPartition) {
    std::vector<PartitionVariant> variants;
    if (o.variant.empty())
      variants = PartitionVariant::all();
    else
      variants.push_back(parse_variant(o.variant));
    for (const auto& v : variants) {
      Tally t;
      auto run = [&](const SetSystem& s, std::size_t k) {
        if (!is_rhs_valid(s, k)) return;
        t.add(verify_rhs_partition(s, k, v, caps), sets_label(s, k));
      };
      if (!o.source.empty()) {
        SetSource src = load_sets(o.source);
        if (!src.k) throw ArgumentError("the set system file needs \"k\"");
        rhs_to_bv_candidate_partition(src.sets, *src.k, v);  // domain check
        run(src.sets, *src.k);
      } else {
        Range m = sw.get("m", {3, 3}), k = sw.get("k", {2, 2});
        for (std::size_t mm = m.lo; mm <= m.hi; ++mm)
          for (std::size_t kk = k.lo; kk <= k.hi; ++kk)
            for_each_system(mm, all_subsets(mm), sw.get("n", {mm + 1, mm + 2}), sw,
                            [&](const SetSystem& s) { run(s, kk); });
      }
      print_tally(t, v.code(), out, err);
      ok = ok && t.ok();
    }
  } else if (f == Family::X3cPv) {
    std::vector<TieRule> ties;
    if (auto tr = parse_tie(o.tie))
      ties.push_back(*tr);
    else
      ties = {TieRule::TE, TieRule::TP};
    for (TieRule tie : ties) {
      Tally t;
      auto run = [&](const SetSystem& s) { t.add(verify_x3c(s, tie, caps), sets_label(s, 0)); };
      if (!o.source.empty()) {
        SetSource src = load_sets(o.source);
        if (!is_x3c_valid(src.sets)) x3c_to_bv_voter_partition(src.sets, tie);  // throws
        run(src.sets);
      } else {
        // m counts triples in an exact cover, so |B| = 3m
        Range m = sw.get("m", {2, 2});
        for (std::size_t mm = std::max<std::size_t>(m.lo, 2); mm <= m.hi; ++mm)
          for_each_system(3 * mm, all_triples(3 * mm), sw.get("n", {1, 3}), sw, run);
      }
      print_tally(t, tie == TieRule::TE ? "te" : "tp", out, err);
      ok = ok && t.ok();
    }
  } else if (f == Family::RhsFvDcpvTp) {
    out << "forward-direction + property checks only (partial)\n";
    Tally t;
    SubelectionAudit audit;
    std::uint64_t seed = sw.seed;
    auto run = [&](const SetSystem& s, std::size_t k) {
      if (!is_rhs_valid(s, k)) return;
      t.add(verify_rhs_fallback(s, k), sets_label(s, k));
      auto a = audit_subelections(rhs_to_fv_destructive_voter_partition(s, k), false, o.samples, seed++, caps);
      audit.checked += a.checked;
      audit.violations += a.violations;
    };
    if (!o.source.empty()) {
      SetSource src = load_sets(o.source);
      if (!src.k) throw ArgumentError("the set system file needs \"k\"");
      rhs_to_fv_destructive_voter_partition(src.sets, *src.k);  // domain check
      run(src.sets, *src.k);
    } else {
      Range m = sw.get("m", {3, 3}), k = sw.get("k", {2, 2});
      for (std::size_t mm = m.lo; mm <= m.hi; ++mm)
        for (std::size_t kk = k.lo; kk <= k.hi; ++kk)
          for_each_system(mm, all_subsets(mm), sw.get("n", {mm + 1, mm + 1}), sw,
                          [&](const SetSystem& s) { run(s, kk); });
    }
    if (t.total == 0) throw ArgumentError("the sweep selects no instances");
    out << "forward witnesses: " << t.forward_ok << "/" << t.forward << " replay (" << t.total << " instances)\n";
    out << "subelection property: " << audit.violations << " violations in " << audit.checked
        << " bipartitions\n";
    for (const auto& fl : t.failures) err << "  " << fl << "\n";
    ok = t.ok() && audit.violations == 0;
  } else {
    Tally t;
    auto run = [&](const SetSystem& s, std::optional<std::size_t> only_k) {
      for (std::size_t k = 1; k <= s.base_size; ++k) {
        if (only_k && k != *only_k) continue;
        t.add(verify_hs_to_rhs(s, k), sets_label(s, k));
      }
    };
    if (!o.source.empty()) {
      SetSource src = load_sets(o.source);
      run(src.sets, src.k);
    } else {
      Range m = sw.get("m", {1, 3});
      for (std::size_t mm = m.lo; mm <= m.hi; ++mm)
        for_each_system(mm, all_subsets(mm), sw.get("n", {1, 3}), sw,
                        [&](const SetSystem& s) { run(s, std::nullopt); });
    }
    print_tally(t, "", out, err);
    ok = t.ok();
  }
  return ok ? kYes : kNo;
}

}  // namespace

std::string format_report(const WinnerReport& r, const std::vector<std::string>& names) {
  if (r.winners.empty()) return "winners: none";
  std::vector<std::string> w;
  for (auto c : r.winners) w.push_back(names.at(c));
  std::string s = "winners: " + join_names(w);
  if (r.mode == WinnerMode::MajorityLevel)
    s += "; level " + std::to_string(r.level);
  else
    s += "; approval";
  return s + "; score " + std::to_string(r.score);
}

std::string format_witness(const Witness& w, const ElectionDocument& doc, std::size_t registered) {
  auto cands = [&](const std::vector<std::uint32_t>& ids) {
    std::vector<std::string> out;
    for (auto c : ids) out.push_back(doc.candidates.at(c));
    return out;
  };
  auto voters = [](const std::vector<std::uint32_t>& ids, const char* prefix) {
    std::vector<std::string> out;
    for (auto v : ids) out.push_back(prefix + std::to_string(v + 1));
    return out;
  };
  switch (w.kind) {
    case WitnessKind::AddedCandidates:
      return "add candidates " + braces(cands(w.members));
    case WitnessKind::DeletedCandidates:
      return "delete candidates " + braces(cands(w.members));
    case WitnessKind::AddedVoters:
      return "add voters " + braces(voters(w.members, "u"));
    case WitnessKind::DeletedVoters:
      return "delete voters " + braces(voters(w.members, "v"));
    case WitnessKind::CandidateBipartition: {
      CandidateSet c1 = CandidateSet::of(doc.candidates.size(), w.members);
      CandidateSet c2 = CandidateSet::full(doc.candidates.size());
      c2 -= c1;
      c2 -= spoiler_set(doc);
      return "partition candidates " + braces(cands(w.members)) + " | " + braces(cands(c2.members()));
    }
    case WitnessKind::VoterBipartition: {
      std::vector<std::uint32_t> rest;
      for (std::uint32_t v = 0; v < registered; ++v)
        if (!std::binary_search(w.members.begin(), w.members.end(), v)) rest.push_back(v);
      return "partition voters " + braces(voters(w.members, "v")) + " | " + braces(voters(rest, "v"));
    }
  }
  return {};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bucklin and fallback voting: winners, control solvers, reductions"};
  app.require_subcommand(1);

  WinnersOpts wo;
  auto* winners = app.add_subcommand("winners", "Print the winners of an election file");
  winners->add_option("file", wo.file, "election file")->required();
  winners->add_option("--rule", wo.rule, "bucklin or fallback")->check(CLI::IsMember({"bucklin", "fallback"}));

  SolveOpts so;
  auto* solve_cmd = app.add_subcommand("solve", "Decide a control problem and print a witness");
  solve_cmd->add_option("file", so.file, "election file")->required();
  solve_cmd->add_option("--control", so.control, "control code, e.g. ccac or dcpv-tp");
  solve_cmd->add_option("--target", so.target, "distinguished candidate");
  solve_cmd->add_option("--budget", so.budget, "number of candidates or voters the chair may touch");
  solve_cmd->add_option("--pool", so.pool, "file with unregistered voters");
  solve_cmd->add_option("--tie", so.tie, "te or tp for partition codes")->check(CLI::IsMember({"te", "tp"}));
  solve_cmd->add_option("--engine", so.engine, "brute or poly")->check(CLI::IsMember({"brute", "poly"}));
  solve_cmd->add_option("--instance", so.instance, "instance descriptor written by reduce");

  ReduceOpts ro;
  auto* reduce = app.add_subcommand("reduce", "Build a control instance from a source instance");
  reduce->add_option("--family", ro.family, "reduction family id")->required();
  reduce->add_option("source", ro.source, "graph or set system file")->required();
  reduce->add_option("--out", ro.out, "output path prefix")->required();
  reduce->add_option("--variant", ro.variant, "rhs-partition problem variant, e.g. dcrpc-tp");
  reduce->add_option("--tie", ro.tie, "x3c-ccpv tie rule")->check(CLI::IsMember({"te", "tp"}));

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Compare source oracle and control solver verdicts");
  verify->add_option("--family", vo.family, "reduction family id")->required();
  verify->add_option("source", vo.source, "single source instance");
  verify->add_option("--sweep", vo.sweep, "e.g. n=1..4 or n=5,random=200,seed=3");
  verify->add_option("--variant", vo.variant, "rhs-partition problem variant");
  verify->add_option("--tie", vo.tie, "x3c-ccpv tie rule")->check(CLI::IsMember({"te", "tp"}));
  verify->add_option("--samples", vo.samples, "random bipartitions per instance for the property check");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (winners->parsed()) return cmd_winners(wo, out);
    if (solve_cmd->parsed()) return cmd_solve(so, out);
    if (reduce->parsed()) return cmd_reduce(ro, out);
    if (verify->parsed()) return cmd_verify(vo, out, err);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace bvc::cli
