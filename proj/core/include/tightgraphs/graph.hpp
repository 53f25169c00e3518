#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tightgraphs/bitset.hpp"

namespace tightgraphs {

// Simple undirected graph on vertices 0..n-1 with bitmap adjacency rows.
// Build it, then treat it as a value; every analysis below is a pure
// function of the graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  static Graph from_edges(int vertex_count, std::span<const std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return edge_count_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  int degree(int v) const { return rows_[v].count(); }
  const Bitset& neighbors(int v) const { return rows_[v]; }

  // sorted, ascending
  std::vector<int> neighbor_list(int v) const { return rows_[v].to_vector(); }

  const std::string& label(int v) const { return labels_[v]; }
  void set_label(int v, std::string s) { labels_[v] = std::move(s); }

  // edges as (u, v) with u < v, sorted lexicographically
  std::vector<std::pair<int, int>> edges() const;

  bool is_regular(int* valency = nullptr) const;

 private:
  int n_ = 0;
  long long edge_count_ = 0;
  std::vector<Bitset> rows_;
  std::vector<std::string> labels_;
};

struct DistanceMatrix {
  static constexpr int kUnreachable = -1;

  int n = 0;
  std::vector<int> dist;  // row-major n*n, -1 when unreachable
  bool connected = false;
  int diameter = 0;  // max over reachable pairs

  int at(int u, int v) const { return dist[static_cast<size_t>(u) * n + v]; }
};

// BFS from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

// Proper 2-coloring attempt; precondition: g connected.
bool is_bipartite(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // new index -> original vertex
};

// Vertices may be given in any order; the subgraph keeps that order.
// Throws std::out_of_range on a bad or repeated index.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& vertices);

// Complete multipartite shape K_{parts x part_size}. parts == 1 is the
// degenerate edgeless case (K_{1xn} is the n-coclique); recognition reports
// it because mu-graph classification needs that boundary.
struct MultipartiteShape {
  long long parts = 0;
  long long part_size = 0;
  bool operator==(const MultipartiteShape&) const = default;
};

// Returns the shape iff the complement of g is a disjoint union of `parts`
// cliques, all of size `part_size`. Empty graph (0 vertices) gives nullopt.
std::optional<MultipartiteShape> recognize_complete_multipartite(const Graph& g);

// All maximal cliques, each sorted ascending, the list sorted
// lexicographically. Bron-Kerbosch with pivoting.
std::vector<std::vector<int>> enumerate_maximal_cliques(const Graph& g);

bool is_clique(const Graph& g, std::span<const int> vertices);
bool is_coclique(const Graph& g, std::span<const int> vertices);

}  // namespace tightgraphs
