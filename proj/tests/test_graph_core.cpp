#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "tightgraphs/bitset.hpp"
#include "tightgraphs/edge_list.hpp"
#include "tightgraphs/graph.hpp"
#include "tightgraphs/named_graphs.hpp"

using namespace tightgraphs;

namespace {

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// Floyd-Warshall, the independent distance oracle for the BFS code.
std::vector<int> fw_distances(const Graph& g) {
  const int n = g.vertex_count();
  const int inf = 1 << 28;
  std::vector<int> d(static_cast<size_t>(n) * n, inf);
  for (int i = 0; i < n; ++i) d[static_cast<size_t>(i) * n + i] = 0;
  for (auto [u, v] : g.edges()) {
    d[static_cast<size_t>(u) * n + v] = 1;
    d[static_cast<size_t>(v) * n + u] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[static_cast<size_t>(i) * n + j] =
            std::min(d[static_cast<size_t>(i) * n + j],
                     d[static_cast<size_t>(i) * n + k] + d[static_cast<size_t>(k) * n + j]);
  for (auto& x : d)
    if (x >= inf) x = DistanceMatrix::kUnreachable;
  return d;
}

}  // namespace

TEST_CASE("bitset basics") {
  Bitset b(130);
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.test(64));
  CHECK_FALSE(b.test(63));
  CHECK(b.to_vector() == std::vector<int>{0, 64, 129});

  Bitset c(130);
  c.set(64);
  c.set(100);
  CHECK(Bitset::intersection_count(b, c) == 1);
  Bitset d = b & c;
  CHECK(d.to_vector() == std::vector<int>{64});
  b.and_not(c);
  CHECK(b.to_vector() == std::vector<int>{0, 129});
}

TEST_CASE("graph construction and edges") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);  // duplicate collapses
  g.add_edge(2, 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
}

TEST_CASE("BFS distances match the Floyd-Warshall oracle") {
  for (const Graph& g :
       {path_graph(7), cycle_graph(6), kneser2(5), johnson(6, 3), halved_cube(5)}) {
    auto dm = all_pairs_distances(g);
    auto oracle = fw_distances(g);
    REQUIRE(dm.dist.size() == oracle.size());
    for (size_t i = 0; i < oracle.size(); ++i) CHECK(dm.dist[i] == oracle[i]);
  }
}

TEST_CASE("diameter and connectivity") {
  CHECK(all_pairs_distances(johnson(6, 3)).diameter == 3);
  CHECK(all_pairs_distances(kneser2(5)).diameter == 2);
  CHECK(is_connected(johnson(6, 3)));

  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK_FALSE(is_connected(g));
  CHECK_FALSE(all_pairs_distances(g).connected);
  CHECK(all_pairs_distances(g).at(0, 2) == DistanceMatrix::kUnreachable);
}

TEST_CASE("bipartite detection") {
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(is_bipartite(hypercube(4)));
  CHECK_FALSE(is_bipartite(johnson(6, 3)));
}

TEST_CASE("induced subgraphs keep the given order") {
  Graph g = johnson(6, 3);
  std::vector<int> verts = {5, 0, 7};
  auto sub = induced_subgraph(g, verts);
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.to_parent == verts);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      CHECK(sub.graph.adjacent(i, j) == g.adjacent(verts[i], verts[j]));
  std::vector<int> bad = {0, 0};
  CHECK_THROWS_AS(induced_subgraph(g, bad), std::out_of_range);
}

TEST_CASE("complete multipartite recognition over the built family") {
  for (int t = 2; t <= 5; ++t)
    for (int n = 1; n <= 5; ++n) {
      auto shape = recognize_complete_multipartite(complete_multipartite(t, n));
      REQUIRE(shape.has_value());
      CHECK(shape->parts == t);
      CHECK(shape->part_size == n);
    }
}

TEST_CASE("multipartite recognition boundary cases") {
  // Edgeless graph is the single-part degenerate K_{1xn}.
  Graph empty3(3);
  auto shape = recognize_complete_multipartite(empty3);
  REQUIRE(shape.has_value());
  CHECK(shape->parts == 1);
  CHECK(shape->part_size == 3);

  // Complete graph K_n = K_{nx1}.
  Graph k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  shape = recognize_complete_multipartite(k4);
  REQUIRE(shape.has_value());
  CHECK(shape->parts == 4);
  CHECK(shape->part_size == 1);

  // Unequal parts are not a K_{txn}.
  Graph g(5);  // complement of K_2 + K_3
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 5; ++j) g.add_edge(i, j);
  CHECK_FALSE(recognize_complete_multipartite(g).has_value());

  // Path is not complete multipartite.
  CHECK_FALSE(recognize_complete_multipartite(path_graph(4)).has_value());
  CHECK_FALSE(recognize_complete_multipartite(Graph(0)).has_value());
}

TEST_CASE("maximal cliques of the triangular graph T(6)") {
  Graph t6 = johnson(6, 2);
  auto cliques = enumerate_maximal_cliques(t6);
  // 6 point-stars of size 5 and C(6,3) = 20 triangles.
  CHECK(cliques.size() == 26);
  int fives = 0, threes = 0;
  for (const auto& c : cliques) {
    CHECK(is_clique(t6, c));
    CHECK(std::is_sorted(c.begin(), c.end()));
    if (c.size() == 5) ++fives;
    if (c.size() == 3) ++threes;
    // maximality: no vertex extends the clique
    for (int v = 0; v < t6.vertex_count(); ++v) {
      if (std::find(c.begin(), c.end(), v) != c.end()) continue;
      bool extends = true;
      for (int u : c) extends = extends && t6.adjacent(u, v);
      CHECK_FALSE(extends);
    }
  }
  CHECK(fives == 6);
  CHECK(threes == 20);
  CHECK(std::is_sorted(cliques.begin(), cliques.end()));
}

TEST_CASE("maximal cliques of the Petersen graph are its edges") {
  auto cliques = enumerate_maximal_cliques(kneser2(5));
  CHECK(cliques.size() == 15);
  for (const auto& c : cliques) CHECK(c.size() == 2);
}

TEST_CASE("clique and coclique predicates") {
  Graph g = kneser2(5);
  std::vector<int> edge = {0, 7};
  bool adj = g.adjacent(0, 7);
  CHECK(is_clique(g, edge) == adj);
  std::vector<int> single = {3};
  CHECK(is_clique(g, single));
  CHECK(is_coclique(g, single));
}

TEST_CASE("edge list round trip") {
  for (const Graph& g : {johnson(6, 3), kneser2(5), path_graph(5)}) {
    std::string text = edge_list_string(g);
    std::istringstream in(text);
    Graph back = read_edge_list(in);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edge_count() == g.edge_count());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("edge list accepts comments and reports malformed input by line") {
  std::istringstream ok("# leading comment\np 3 1 # trailing\n0 1\n");
  Graph g = read_edge_list(ok);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 1);

  auto rejects = [](const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    try {
      read_edge_list(in);
      FAIL("expected parse error for: " << text);
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  rejects("q 3 1\n0 1\n", "header");
  rejects("p 3 1\n0 3\n", "range");
  rejects("p 3 1\n1 1\n", "loop");
  rejects("p 3 2\n0 1\n0 1\n", "duplicate");
  rejects("p 3 2\n0 1\n", "promises 2 edges");
  rejects("p 3 1\n0 1 9\n", "trailing");
}

TEST_CASE("regularity check") {
  int val = -1;
  CHECK(johnson(6, 3).is_regular(&val));
  CHECK(val == 9);
  CHECK_FALSE(path_graph(3).is_regular());
}
