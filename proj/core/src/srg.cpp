#include "tightgraphs/srg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace tightgraphs {

SrgParams srg_params_from_tuple(long long v, long long k, long long lambda, long long mu) {
  SrgParams p;
  p.v = v;
  p.k = k;
  p.lambda = lambda;
  p.mu = mu;
  // x^2 - (lambda - mu) x - (k - mu) = 0
  Int tr = Int(lambda) - mu;
  Int disc = tr * tr + 4 * (Int(k) - mu);
  if (disc < 0) throw std::domain_error("srg parameters have complex eigenvalues");
  Int root;
  if (is_perfect_square(disc, &root) && rat_is_integer(Rat(tr + root, 2))) {
    p.integral = true;
    p.r_int = to_ll_checked(Int((tr + root) / 2), "srg eigenvalue");
    p.s_int = to_ll_checked(Int((tr - root) / 2), "srg eigenvalue");
    p.r_approx = static_cast<double>(p.r_int);
    p.s_approx = static_cast<double>(p.s_int);
  } else {
    double t = static_cast<double>(lambda - mu);
    double d = std::sqrt(to_double(disc));
    p.integral = false;
    p.r_approx = (t + d) / 2;
    p.s_approx = (t - d) / 2;
  }
  return p;
}

SrgCheck srg_params_from_graph(const Graph& g) {
  SrgCheck out;
  const int n = g.vertex_count();
  auto fail = [&](NotSrgWitness w) {
    out.witness = std::move(w);
    return out;
  };
  if (n < 2) return fail({.reason = "fewer than 2 vertices"});
  if (!is_connected(g)) return fail({.reason = "not connected"});
  int k = 0;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (v == 0)
      k = d;
    else if (d != k)
      return fail({.reason = "not regular", .u = 0, .v = v, .expected = k, .actual = d});
  }
  if (k == n - 1) return fail({.reason = "complete graph has no nontrivial structure"});
  if (k == 0) return fail({.reason = "edgeless"});

  long long lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      long long common = Bitset::intersection_count(g.neighbors(u), g.neighbors(v));
      if (g.adjacent(u, v)) {
        if (lambda < 0)
          lambda = common;
        else if (common != lambda)
          return fail({.reason = "lambda not constant",
                       .u = u, .v = v, .expected = lambda, .actual = common});
      } else {
        if (mu < 0)
          mu = common;
        else if (common != mu)
          return fail({.reason = "mu not constant",
                       .u = u, .v = v, .expected = mu, .actual = common});
      }
    }
  }
  if (mu < 0) return fail({.reason = "complete graph has no nontrivial structure"});
  out.params = srg_params_from_tuple(n, k, lambda, mu);
  return out;
}

SrgParams gq_point_graph_params(const GqOrder& order) {
  if (order.s < 1 || order.t < 1) throw std::invalid_argument("gq order must be positive");
  long long s = order.s, t = order.t;
  return srg_params_from_tuple((s + 1) * (s * t + 1), s * (t + 1), s - 1, t + 1);
}

Rat hoffman_clique_bound(const SrgParams& p) {
  if (!p.integral) throw std::domain_error("clique bound needs integral smallest eigenvalue");
  long long m = p.m();
  if (m <= 0) throw std::domain_error("smallest eigenvalue must be negative");
  return Rat(1) + Rat(p.k, m);
}

CocliqueBound coclique_bound(const Graph& g, long long k, long long m,
                             std::span<const int> coclique) {
  int actual_k;
  if (!g.is_regular(&actual_k) || actual_k != k)
    throw std::invalid_argument("coclique_bound: graph is not k-regular");
  if (m <= 0) throw std::invalid_argument("coclique_bound: m must be positive");
  CocliqueBound out;
  Rat denom = Rat(1) + Rat(k, m);
  out.bound = Rat(g.vertex_count()) / denom;
  if (!coclique.empty()) {
    if (!is_coclique(g, coclique))
      throw std::invalid_argument("coclique_bound: supplied set is not a coclique");
    bool attains = Rat(static_cast<long long>(coclique.size())) == out.bound;
    if (attains) {
      Bitset members(g.vertex_count());
      for (int v : coclique) members.set(v);
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (members.test(v)) continue;
        if (Bitset::intersection_count(g.neighbors(v), members) != m) {
          attains = false;  // bound met but certificate fails; report as not certified
          break;
        }
      }
    }
    out.equality_certified = attains;
  }
  return out;
}

DelsarteCliqueCheck is_delsarte_clique(const Graph& g, const SrgParams& p,
                                       std::span<const int> c) {
  if (!p.integral) throw std::domain_error("delsarte check needs integral eigenvalues");
  DelsarteCliqueCheck out;
  if (!is_clique(g, c)) return out;
  out.is_clique = true;
  long long m = p.m();
  if (m <= 0) throw std::domain_error("smallest eigenvalue must be negative");
  Rat bound = Rat(1) + Rat(p.k, m);
  out.attains_bound = Rat(static_cast<long long>(c.size())) == bound;
  if (!out.attains_bound) return out;
  if (p.mu % m != 0) throw std::domain_error("mu not divisible by m in delsarte certificate");
  // regularity certificate: every vertex outside c sees exactly mu/m members
  long long quota = p.mu / m;
  Bitset members(g.vertex_count());
  for (int v : c) members.set(v);
  out.outside_regularity = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (members.test(v)) continue;
    long long inside = Bitset::intersection_count(g.neighbors(v), members);
    if (inside != quota) {
      out.outside_regularity = false;
      out.violating_vertex = v;
      break;
    }
  }
  return out;
}

CliqueNeighborLaw check_clique_neighbor_law(const Graph& g, int x, std::span<const int> c) {
  if (x < 0 || x >= g.vertex_count()) throw std::out_of_range("vertex out of range");
  for (int v : c)
    if (!g.adjacent(x, v))
      throw std::invalid_argument("clique vertex not in the neighborhood of x");
  // local graph and its parameters
  auto local = induced_subgraph(g, g.neighbors(x));
  SrgCheck srg = srg_params_from_graph(local.graph);
  if (!srg.ok())
    throw std::domain_error("neighborhood of x is not strongly regular: " +
                            srg.witness->reason);
  const SrgParams& p = *srg.params;
  if (!p.integral) throw std::domain_error("local eigenvalues not integral");
  long long m = p.m();
  // c must be a Delsarte clique of the local graph
  std::vector<int> c_local;
  for (int v : c) {
    auto it = std::find(local.to_parent.begin(), local.to_parent.end(), v);
    c_local.push_back(static_cast<int>(it - local.to_parent.begin()));
  }
  DelsarteCliqueCheck dc = is_delsarte_clique(local.graph, p, c_local);
  if (!dc.is_clique || !dc.attains_bound)
    throw std::invalid_argument("supplied set is not a Delsarte clique of the local graph");

  CliqueNeighborLaw out;
  if (p.mu % m != 0) throw std::domain_error("mu not divisible by m");
  out.expected = 1 + p.mu / m;
  Bitset members(g.vertex_count());
  for (int v : c) members.set(v);

  DistanceMatrix dm = all_pairs_distances(g);
  std::map<long long, long long> hist;
  out.holds = true;
  for (int z = 0; z < g.vertex_count(); ++z) {
    if (dm.at(x, z) != 2) continue;
    long long seen = Bitset::intersection_count(g.neighbors(z), members);
    ++hist[seen];
    if (seen != 0 && seen != out.expected && out.holds) {
      out.holds = false;
      out.violating_vertex = z;
      out.violating_count = seen;
    }
  }
  out.histogram.assign(hist.begin(), hist.end());
  return out;
}

}  // namespace tightgraphs
