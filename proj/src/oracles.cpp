#include "bvc/oracles.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "bvc/errors.hpp"
#include "bvc/exact.hpp"

namespace bvc {

Graph::Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_(n), adj_(n, 0) {
  if (n > 64) throw ArgumentError("graphs are limited to 64 vertices");
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ArgumentError("edge names an unknown vertex");
    if (u == v) throw ArgumentError("self loops are not allowed");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (u == v || g.adjacent(u, v)) out.push_back(u);
  return out;
}

namespace {

std::uint64_t low_bits(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

bool is_dominating(const Graph& g, const std::vector<Vertex>& set) {
  std::uint64_t covered = 0;
  for (Vertex v : set) covered |= g.closed_mask(v);
  return (covered & low_bits(g.vertex_count())) == low_bits(g.vertex_count());
}

std::optional<std::vector<Vertex>> solve_dominating_set(const Graph& g, std::size_t k) {
  const std::uint64_t all = low_bits(g.vertex_count());
  std::optional<std::vector<Vertex>> found;
  for_each_subset(g.vertex_count(), k, [&](std::span<const std::uint32_t> pick) {
    std::uint64_t covered = 0;
    for (auto v : pick) covered |= g.closed_mask(v);
    if ((covered & all) != all) return false;
    found.emplace(pick.begin(), pick.end());
    return true;
  });
  return found;
}

std::uint64_t SetSystem::mask(std::size_t i) const {
  std::uint64_t m = 0;
  for (auto x : subsets[i]) m |= std::uint64_t{1} << x;
  return m;
}

void SetSystem::validate() const {
  if (base_size > 64) throw ArgumentError("base sets are limited to 64 elements");
  for (const auto& s : subsets) {
    std::vector<std::uint32_t> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ArgumentError("subset repeats an element");
    for (auto x : s)
      if (x >= base_size) throw ArgumentError("subset names element " + std::to_string(x));
  }
}

bool is_hitting_set(const SetSystem& s, const std::vector<std::uint32_t>& set) {
  std::uint64_t chosen = 0;
  for (auto x : set) chosen |= std::uint64_t{1} << x;
  for (std::size_t i = 0; i < s.subsets.size(); ++i)
    if ((s.mask(i) & chosen) == 0) return false;
  return true;
}

std::optional<std::vector<std::uint32_t>> solve_hitting_set(const SetSystem& s, std::size_t k) {
  s.validate();
  std::vector<std::uint64_t> masks;
  for (std::size_t i = 0; i < s.subsets.size(); ++i) masks.push_back(s.mask(i));
  std::optional<std::vector<std::uint32_t>> found;
  for_each_subset(s.base_size, k, [&](std::span<const std::uint32_t> pick) {
    std::uint64_t chosen = 0;
    for (auto x : pick) chosen |= std::uint64_t{1} << x;
    for (auto m : masks)
      if ((m & chosen) == 0) return false;
    found.emplace(pick.begin(), pick.end());
    return true;
  });
  return found;
}

std::optional<std::vector<std::size_t>> solve_x3c(const SetSystem& s) {
  s.validate();
  if (!is_x3c_valid(s)) throw ArgumentError("exact cover needs |B| = 3m with m > 1 and 3-element sets");
  const std::size_t need = s.base_size / 3;
  const std::uint64_t all = low_bits(s.base_size);
  std::vector<std::uint64_t> masks;
  for (std::size_t i = 0; i < s.subsets.size(); ++i) masks.push_back(s.mask(i));
  std::optional<std::vector<std::size_t>> found;
  for_each_subset(s.subsets.size(), need, [&](std::span<const std::uint32_t> pick) {
    if (pick.size() != need) return false;
    std::uint64_t covered = 0;
    for (auto i : pick) {
      if (std::popcount(masks[i]) != 3 || (covered & masks[i]) != 0) return false;
      covered |= masks[i];
    }
    if (covered != all) return false;
    found.emplace(pick.begin(), pick.end());
    return true;
  });
  return found;
}

bool is_rhs_valid(const SetSystem& s, std::size_t k) {
  const std::size_t n = s.subsets.size();
  const std::size_t m = s.base_size;
  return n > m && m > k && k > 1;
}

bool is_x3c_valid(const SetSystem& s) {
  if (s.base_size % 3 != 0 || s.base_size / 3 <= 1) return false;
  return std::all_of(s.subsets.begin(), s.subsets.end(), [](const auto& x) { return x.size() == 3; });
}

std::vector<Graph> all_graphs(std::size_t n) {
  if (n > 6) throw ArgumentError("enumerating all graphs is limited to 6 vertices");
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1u) edges.push_back(slots[i]);
    out.emplace_back(n, edges);
  }
  return out;
}

Graph random_graph(std::size_t n, double edge_probability, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace bvc
