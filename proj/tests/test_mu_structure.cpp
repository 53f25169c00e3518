#include <stdexcept>

#include "doctest.h"
#include "tightgraphs/designs.hpp"
#include "tightgraphs/graph.hpp"
#include "tightgraphs/mu_structure.hpp"
#include "tightgraphs/named_graphs.hpp"

using namespace tightgraphs;

namespace {

Graph rook33() { return block_graph_of_oa(build_orthogonal_array(2, 3)).graph; }

// Base edge 0-1 with common neighbor 2; vertex 3 sees only 2 of it while
// vertex 4 sees both 2 and 5, so the triple count is not constant.
Graph nonconstant_gamma_graph() {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(4, 5);
  g.add_edge(5, 0);
  g.add_edge(5, 1);
  g.add_edge(4, 2);
  return g;
}

}  // namespace

TEST_CASE("mu-graph extraction") {
  Graph g = johnson(6, 3);
  auto dm = all_pairs_distances(g);
  int x = 0, z = -1;
  for (int v = 0; v < g.vertex_count() && z < 0; ++v)
    if (dm.at(x, v) == 2) z = v;
  REQUIRE(z >= 0);
  auto mu = mu_graph(g, x, z);
  CHECK(mu.graph.vertex_count() == 4);
  auto shape = recognize_complete_multipartite(mu.graph);
  REQUIRE(shape.has_value());
  CHECK(shape->parts == 2);
  CHECK(shape->part_size == 2);
  // adjacent and coincident pairs are rejected
  CHECK_THROWS_AS(mu_graph(g, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(mu_graph(g, x, g.neighbor_list(x)[0]), std::invalid_argument);
}

TEST_CASE("mu-census of the Johnson graph J(6,3)") {
  auto census = mu_census(johnson(6, 3));
  CHECK(census.pair_count == 90);
  CHECK(census.uniform);
  REQUIRE(census.shape.has_value());
  CHECK(census.shape->to_string() == "K_{2x2}");
  CHECK(census.counts.size() == 1);
  CHECK(census.counts.begin()->second == 90);
}

TEST_CASE("mu-census of the halved 6-cube") {
  auto census = mu_census(halved_cube(6));
  CHECK(census.pair_count == 240);
  CHECK(census.uniform);
  REQUIRE(census.shape.has_value());
  CHECK(census.shape->to_string() == "K_{3x2}");
}

TEST_CASE("mu-census of complete multipartite graphs drops one part") {
  for (int t = 2; t <= 4; ++t)
    for (int n = 2; n <= 4; ++n) {
      auto census = mu_census(complete_multipartite(t, n));
      REQUIRE(census.uniform);
      CHECK(census.shape->kind == MuShape::Kind::Multipartite);
      CHECK(census.shape->t == t - 1);
      CHECK(census.shape->n == n);
    }
}

TEST_CASE("mu-census distinguishes SRG-shaped mu-graphs") {
  // Taylor double of GQ(2,2): mu-graphs are 8-vertex graphs, classified
  // uniformly; the local GQ(2,2) structure makes them non-multipartite.
  Graph d = taylor_double(gq22_point_graph());
  auto census = mu_census(d);
  CHECK(census.pair_count == 240);
  CHECK(census.uniform);
  REQUIRE(census.shape.has_value());
  CHECK(census.shape->kind != MuShape::Kind::Multipartite);
}

TEST_CASE("gamma of the witness graphs") {
  auto g = gamma_number(johnson(6, 3));
  CHECK(g.exists);
  CHECK(g.value == 2);
  CHECK(g.triple_count == 360);

  g = gamma_number(halved_cube(6));
  CHECK(g.exists);
  CHECK(g.value == 3);

  g = gamma_number(johnson(6, 2));  // T(6), the local graph of the halved 6-cube
  CHECK(g.exists);
  CHECK(g.value == 2);

  g = gamma_number(rook33());
  CHECK(g.exists);
  CHECK(g.value == 1);

  // Petersen: triples exist and never see a common neighbor
  g = gamma_number(kneser2(5));
  CHECK(g.exists);
  CHECK(g.value == 0);
  CHECK(g.triple_count > 0);
}

TEST_CASE("graphs without distance-2 triples have no gamma") {
  auto g = gamma_number(complete_multipartite(3, 2));
  CHECK_FALSE(g.exists);
  CHECK(g.triple_count == 0);
}

TEST_CASE("non-constant triple counts are reported with a witness") {
  Graph g = nonconstant_gamma_graph();
  auto rep = gamma_number(g);
  CHECK_FALSE(rep.exists);
  CHECK(rep.x >= 0);

  auto full = gamma_number(g, true);
  CHECK_FALSE(full.exists);
  CHECK(full.histogram.size() > 1);
  long long total = 0;
  for (const auto& [count, freq] : full.histogram) total += freq;
  CHECK(total == full.triple_count);
}

TEST_CASE("the local recursion holds on the tight witnesses") {
  auto rep = verify_jmt_recursion(johnson(6, 3));
  CHECK(rep.status == CheckStatus::Pass);

  rep = verify_jmt_recursion(halved_cube(6));
  CHECK(rep.status == CheckStatus::Pass);
}

TEST_CASE("the local recursion is inapplicable without a uniform multipartite census") {
  // Petersen mu-graphs are single vertices: uniform K_{1x1}, below the t >= 2 gate
  auto rep = verify_jmt_recursion(kneser2(5));
  CHECK(rep.status == CheckStatus::Inapplicable);

  rep = verify_jmt_recursion(taylor_double(gq22_point_graph()));
  CHECK(rep.status == CheckStatus::Inapplicable);
}

TEST_CASE("OA mu-lemma verifier") {
  CHECK(verify_oa_mu_lemma(johnson(6, 3), 2).status == CheckStatus::Pass);
  // c_2 = 6 fails the m^2 gate for m = 2
  CHECK(verify_oa_mu_lemma(halved_cube(6), 2).status == CheckStatus::Inapplicable);
  // T(8) has c_2 = 4 and all mu-graphs K_{2x2}
  CHECK(verify_oa_mu_lemma(johnson(8, 2), 2).status == CheckStatus::Pass);

  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(verify_oa_mu_lemma(path, 2).status == CheckStatus::Inapplicable);
}

TEST_CASE("Steiner mu-lemma verifier") {
  CHECK(verify_steiner_mu_lemma(halved_cube(6), 2).status == CheckStatus::Pass);
  CHECK(verify_steiner_mu_lemma(johnson(6, 3), 2).status == CheckStatus::Inapplicable);

  // K_{4x4}: c_2 = 12 = m(m+1) for m = 3, but mu-graphs are K_{3x4}, not K_{4x3}
  auto rep = verify_steiner_mu_lemma(complete_multipartite(4, 4), 3);
  CHECK(rep.status == CheckStatus::Fail);
  CHECK(rep.witness_x >= 0);
}

TEST_CASE("observed multipartite censuses stay within t <= 4") {
  // any uniform K_{txn} census with n >= 2 and existing gamma must have t <= 4
  for (const Graph& g : {johnson(6, 3), halved_cube(6), johnson(8, 2), rook33(),
                         taylor_double(gq22_point_graph())}) {
    auto census = mu_census(g);
    if (!census.uniform || !census.shape.has_value()) continue;
    if (census.shape->kind != MuShape::Kind::Multipartite || census.shape->n < 2) continue;
    if (!gamma_number(g).exists) continue;
    CHECK(census.shape->t <= 4);
  }
}

TEST_CASE("mu-shape printing") {
  CHECK(MuShape::multipartite(3, 2).to_string() == "K_{3x2}");
  MuShape srg;
  srg.kind = MuShape::Kind::Srg;
  srg.v = 15;
  srg.k = 6;
  srg.lambda = 1;
  srg.mu = 3;
  CHECK(srg.to_string() == "SRG(15,6,1,3)");
}
