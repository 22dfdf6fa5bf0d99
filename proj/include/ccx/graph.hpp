#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccx/bits.hpp"

namespace ccx {

// Finite simple undirected graph with named vertices.
// Adjacency is kept as one bit row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::string name_prefix = "v");
  explicit Graph(std::vector<std::string> names);

  int n() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;

  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  void set_name(int v, std::string s) { names_[v] = std::move(s); }

  void add_edge(int a, int b);
  bool has_edge(int a, int b) const { return adj_[a].get(b); }
  const Bits& row(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  // Edges as (a,b) with a < b, sorted.
  std::vector<std::pair<int, int>> edges() const;

  std::vector<int> bfs_dist(int src) const;
  std::vector<std::vector<int>> all_pairs_dist() const;
  bool connected() const;
  // Component id per vertex, ids dense from 0 in order of first appearance.
  std::vector<int> components() const;

  // Subgraph induced on the given vertex set; keeps names.
  // The optional out-parameter receives the original index of each new vertex.
  Graph induced(const std::vector<int>& vertices, std::vector<int>* back = nullptr) const;

  // One new vertex per edge, splitting it in two. Original vertices keep
  // their indices; the midpoint of edge k (in edges() order) gets index n()+k.
  Graph subdivide() const;

 private:
  std::vector<std::string> names_;
  std::vector<Bits> adj_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int p, int q);
// All edges of a and b, plus every cross pair.
Graph graph_join(const Graph& a, const Graph& b);

// Exact maximum clique, branch and bound over a degeneracy order.
// Returns the lexicographically least maximum clique (ascending indices).
std::vector<int> max_clique(const Graph& g);

// Isomorphism of vertex-labelled edge structures. Layers share one vertex
// set; a result maps layer-k edges of a onto layer-k edges of b for every k.
// Color refinement prunes, then backtracking completes. Returns a -> b map.
std::optional<std::vector<int>> find_isomorphism(const std::vector<const Graph*>& a,
                                                 const std::vector<const Graph*>& b);
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

// Canonical 64-bit code of a graph on at most 11 vertices: the minimum
// upper-triangle adjacency encoding over all vertex permutations.
std::uint64_t canonical_code(const Graph& g);

}  // namespace ccx
