#include "tightgraphs/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace tightgraphs {

Graph::Graph(int vertex_count) : n_(vertex_count), labels_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  rows_.assign(n_, Bitset(n_));
  for (int v = 0; v < n_; ++v) labels_[v] = std::to_string(v);
}

Graph Graph::from_edges(int vertex_count, std::span<const std::pair<int, int>> edges) {
  Graph g(vertex_count);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self loop");
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  ++edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[u].next_set_bit(u + 1); v >= 0; v = rows_[u].next_set_bit(v + 1))
      out.emplace_back(u, v);
  return out;
}

bool Graph::is_regular(int* valency) const {
  if (n_ == 0) return false;
  int k = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != k) return false;
  if (valency) *valency = k;
  return true;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix dm;
  dm.n = n;
  dm.dist.assign(static_cast<size_t>(n) * n, DistanceMatrix::kUnreachable);
  dm.connected = n > 0;
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    int* row = dm.dist.data() + static_cast<size_t>(s) * n;
    row[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      int du = row[u];
      const Bitset& nb = g.neighbors(u);
      for (int w = nb.next_set_bit(0); w >= 0; w = nb.next_set_bit(w + 1)) {
        if (row[w] < 0) {
          row[w] = du + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail < n) dm.connected = false;
    for (int v = 0; v < n; ++v)
      if (row[v] > dm.diameter) dm.diameter = row[v];
  }
  return dm;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int found = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    const Bitset& nb = g.neighbors(u);
    for (int w = nb.next_set_bit(0); w >= 0; w = nb.next_set_bit(w + 1)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++found;
        stack.push_back(w);
      }
    }
  }
  return found == n;
}

bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      const Bitset& nb = g.neighbors(u);
      for (int w = nb.next_set_bit(0); w >= 0; w = nb.next_set_bit(w + 1)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int m = static_cast<int>(vertices.size());
  std::vector<int> pos(g.vertex_count(), -1);
  InducedSubgraph out;
  out.graph = Graph(m);
  out.to_parent.assign(vertices.begin(), vertices.end());
  for (int i = 0; i < m; ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("induced_subgraph: bad vertex");
    if (pos[v] >= 0) throw std::out_of_range("induced_subgraph: repeated vertex");
    pos[v] = i;
    out.graph.set_label(i, g.label(v));
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(vertices[i], vertices[j])) out.graph.add_edge(i, j);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& vertices) {
  return induced_subgraph(g, vertices.to_vector());
}

std::optional<MultipartiteShape> recognize_complete_multipartite(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  // Parts are the connected components of the complement; each must be a
  // coclique of g and all must have equal size.
  std::vector<char> assigned(n, 0);
  long long part_size = -1, parts = 0;
  Bitset universe(n);
  for (int v = 0; v < n; ++v) universe.set(v);
  for (int s = 0; s < n; ++s) {
    if (assigned[s]) continue;
    // complement BFS from s
    Bitset comp(n);
    comp.set(s);
    std::vector<int> stack{s};
    assigned[s] = 1;
    std::vector<int> members{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      Bitset nonnb = universe;
      nonnb.and_not(g.neighbors(u));
      nonnb.reset(u);
      for (int w = nonnb.next_set_bit(0); w >= 0; w = nonnb.next_set_bit(w + 1)) {
        if (!assigned[w]) {
          assigned[w] = 1;
          comp.set(w);
          members.push_back(w);
          stack.push_back(w);
        }
      }
    }
    // the component must be a coclique of g
    for (int u : members)
      if (Bitset::intersection_count(g.neighbors(u), comp) != 0) return std::nullopt;
    long long size = static_cast<long long>(members.size());
    if (part_size < 0)
      part_size = size;
    else if (part_size != size)
      return std::nullopt;
    ++parts;
  }
  return MultipartiteShape{parts, part_size};
}

namespace {

void bron_kerbosch(const Graph& g, Bitset& r, Bitset p, Bitset x,
                   std::vector<std::vector<int>>& out) {
  if (!p.any() && !x.any()) {
    out.push_back(r.to_vector());
    return;
  }
  // pivot: vertex of p|x with most neighbors in p
  Bitset px = p | x;
  int pivot = -1, best = -1;
  for (int u = px.next_set_bit(0); u >= 0; u = px.next_set_bit(u + 1)) {
    int c = Bitset::intersection_count(g.neighbors(u), p);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  Bitset candidates = p;
  candidates.and_not(g.neighbors(pivot));
  for (int v = candidates.next_set_bit(0); v >= 0; v = candidates.next_set_bit(v + 1)) {
    r.set(v);
    bron_kerbosch(g, r, p & g.neighbors(v), x & g.neighbors(v), out);
    r.reset(v);
    p.reset(v);
    x.set(v);
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_maximal_cliques(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  if (n == 0) return out;
  Bitset r(n), p(n), x(n);
  for (int v = 0; v < n; ++v) p.set(v);
  bron_kerbosch(g, r, p, x, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_clique(const Graph& g, std::span<const int> vertices) {
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

bool is_coclique(const Graph& g, std::span<const int> vertices) {
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

}  // namespace tightgraphs
