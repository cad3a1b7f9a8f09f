#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

// Brute-force deciders for the source problems of the reductions, plus the
// validity predicates of their restricted variants.

namespace bvc {

using Vertex = std::uint32_t;

// Simple undirected graph on vertices 0..n-1 (n <= 64).
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const { return n_; }
  bool adjacent(Vertex u, Vertex v) const { return ((adj_[u] >> v) & 1u) != 0; }
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  // Bit v of closed_mask(u) is set for v in N[u].
  std::uint64_t closed_mask(Vertex u) const { return adj_[u] | (std::uint64_t{1} << u); }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// N[v] in ascending order.
std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v);
bool is_dominating(const Graph& g, const std::vector<Vertex>& set);
// Smallest dominating set of size <= k, lexicographically first among those.
std::optional<std::vector<Vertex>> solve_dominating_set(const Graph& g, std::size_t k);

// A collection of subsets of {0..base_size-1} (base_size <= 64).
struct SetSystem {
  std::size_t base_size = 0;
  std::vector<std::vector<std::uint32_t>> subsets;

  std::uint64_t mask(std::size_t i) const;
  // Throws ArgumentError on out-of-range or repeated elements.
  void validate() const;
};

bool is_hitting_set(const SetSystem& s, const std::vector<std::uint32_t>& set);
// Smallest hitting set of size <= k, lexicographically first among those.
std::optional<std::vector<std::uint32_t>> solve_hitting_set(const SetSystem& s, std::size_t k);
// Indices of an exact cover by 3-sets, lexicographically first.
std::optional<std::vector<std::size_t>> solve_x3c(const SetSystem& s);

// Restricted hitting set: n > m > k > 1 for n sets over an m-element base.
bool is_rhs_valid(const SetSystem& s, std::size_t k);
// |B| = 3m with m > 1 and every set of size exactly 3.
bool is_x3c_valid(const SetSystem& s);

// All labelled graphs on n vertices (n <= 6), in order of their edge masks.
std::vector<Graph> all_graphs(std::size_t n);
Graph random_graph(std::size_t n, double edge_probability, std::mt19937_64& rng);

}  // namespace bvc
