#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tightgraphs/graph.hpp"
#include "tightgraphs/numeric.hpp"

namespace tightgraphs {

// Parameters (v, k, lambda, mu) with the nontrivial eigenvalues r > s from
// x^2 - (lambda - mu) x - (k - mu) = 0. Eigenvalues are kept exactly when
// the discriminant is a perfect square; doubles are always filled in.
struct SrgParams {
  long long v = 0, k = 0, lambda = 0, mu = 0;
  bool integral = false;     // r, s integers
  long long r_int = 0, s_int = 0;
  double r_approx = 0.0, s_approx = 0.0;

  // Valid only when integral.
  long long m() const { return -s_int; }         // -s
  long long n_gap() const { return r_int - s_int; }  // r - s
};

// Closed-form eigenvalues for a parameter set (no graph needed).
SrgParams srg_params_from_tuple(long long v, long long k, long long lambda, long long mu);

struct NotSrgWitness {
  std::string reason;
  int u = -1, v = -1;        // offending pair when applicable
  long long expected = -1, actual = -1;
};

struct SrgCheck {
  std::optional<SrgParams> params;
  std::optional<NotSrgWitness> witness;
  bool ok() const { return params.has_value(); }
};

// Exhaustive definition check: regular, constant lambda on edges, constant
// mu on non-edges. Complete and edgeless graphs are rejected as degenerate.
// Precondition: g connected with at least 2 vertices (violations are
// reported as a witness, not thrown).
SrgCheck srg_params_from_graph(const Graph& g);

struct GqOrder {
  long long s = 0, t = 0;
};

// Point graph parameters of a generalized quadrangle of order (s, t):
// ((s+1)(st+1), s(t+1), s-1, t+1).
SrgParams gq_point_graph_params(const GqOrder& order);

// Delsarte/Hoffman bound 1 + k/m on cliques, m = -s. Throws
// std::domain_error when s is not integral.
Rat hoffman_clique_bound(const SrgParams& p);

struct CocliqueBound {
  Rat bound;  // v / (1 + k/m)
  // Set when a coclique was supplied: it attains the bound iff its size
  // equals the bound, and then every outside vertex must have exactly m
  // neighbors inside.
  std::optional<bool> equality_certified;
};

// Bound for a k-regular graph with smallest adjacency eigenvalue -m.
CocliqueBound coclique_bound(const Graph& g, long long k, long long m,
                             std::span<const int> coclique = {});

struct DelsarteCliqueCheck {
  bool is_clique = false;
  bool attains_bound = false;                // |c| == 1 + k/m
  bool outside_regularity = false;           // every outside vertex sees mu/m members
  std::optional<int> violating_vertex;
};

// c indexes vertices of g; p must be the parameters of g.
DelsarteCliqueCheck is_delsarte_clique(const Graph& g, const SrgParams& p,
                                       std::span<const int> c);

struct CliqueNeighborLaw {
  bool holds = false;
  long long expected = 0;                    // 1 + mu/m of the local graph
  std::vector<std::pair<long long, long long>> histogram;  // count -> frequency
  std::optional<int> violating_vertex;
  long long violating_count = 0;
};

// For x in g with locally strongly regular neighborhood and a Delsarte
// clique c of the local graph (c given as vertices of g inside N(x)):
// every vertex at distance 2 from x sees 0 or 1 + mu/m vertices of c,
// where mu, m refer to the local graph's parameters.
CliqueNeighborLaw check_clique_neighbor_law(const Graph& g, int x, std::span<const int> c);

}  // namespace tightgraphs
