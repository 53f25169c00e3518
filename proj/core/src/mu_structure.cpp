#include "tightgraphs/mu_structure.hpp"

#include <sstream>
#include <stdexcept>

#include "tightgraphs/srg.hpp"

namespace tightgraphs {

MuShape MuShape::multipartite(long long t, long long n) {
  MuShape s;
  s.kind = Kind::Multipartite;
  s.t = t;
  s.n = n;
  return s;
}

std::string MuShape::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Multipartite:
      os << "K_{" << t << "x" << n << "}";
      break;
    case Kind::Srg:
      os << "SRG(" << v << "," << k << "," << lambda << "," << mu << ")";
      break;
    case Kind::Other:
      os << "other(v=" << verts << ",e=" << edges << ",deg=" << min_deg << ".." << max_deg
         << ")";
      break;
  }
  return os.str();
}

namespace {

MuShape classify(const Graph& g) {
  if (auto shape = recognize_complete_multipartite(g))
    return MuShape::multipartite(shape->parts, shape->part_size);
  if (SrgCheck c = srg_params_from_graph(g); c.ok()) {
    MuShape s;
    s.kind = MuShape::Kind::Srg;
    s.v = c.params->v;
    s.k = c.params->k;
    s.lambda = c.params->lambda;
    s.mu = c.params->mu;
    return s;
  }
  MuShape s;
  s.kind = MuShape::Kind::Other;
  s.verts = g.vertex_count();
  s.edges = g.edge_count();
  if (g.vertex_count() > 0) {
    s.min_deg = g.degree(0);
    s.max_deg = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v) {
      s.min_deg = std::min<long long>(s.min_deg, g.degree(v));
      s.max_deg = std::max<long long>(s.max_deg, g.degree(v));
    }
  }
  return s;
}

}  // namespace

InducedSubgraph mu_graph(const Graph& g, int x, int z) {
  if (x < 0 || z < 0 || x >= g.vertex_count() || z >= g.vertex_count())
    throw std::invalid_argument("mu_graph: vertex out of range");
  if (x == z || g.adjacent(x, z) ||
      Bitset::intersection_count(g.neighbors(x), g.neighbors(z)) == 0)
    throw std::invalid_argument("mu_graph: vertices are not at distance 2");
  return induced_subgraph(g, g.neighbors(x) & g.neighbors(z));
}

MuGraphCensus mu_census(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("mu_census: graph is disconnected");
  MuGraphCensus out;
  DistanceMatrix dm = all_pairs_distances(g);
  for (int x = 0; x < g.vertex_count(); ++x) {
    for (int z = x + 1; z < g.vertex_count(); ++z) {
      if (dm.at(x, z) != 2) continue;
      auto sub = induced_subgraph(g, g.neighbors(x) & g.neighbors(z));
      ++out.counts[classify(sub.graph)];
      ++out.pair_count;
    }
  }
  out.uniform = out.counts.size() == 1;
  if (out.uniform) out.shape = out.counts.begin()->first;
  return out;
}

GammaReport gamma_number(const Graph& g, bool full_histogram) {
  GammaReport out;
  DistanceMatrix dm = all_pairs_distances(g);
  const int n = g.vertex_count();
  for (int x = 0; x < n && (full_histogram || out.x < 0); ++x) {
    const Bitset& nx = g.neighbors(x);
    for (int y = nx.next_set_bit(x + 1); y >= 0; y = nx.next_set_bit(y + 1)) {
      Bitset common = nx & g.neighbors(y);
      for (int z = 0; z < n; ++z) {
        if (dm.at(x, z) != 2 || dm.at(y, z) != 2) continue;
        long long count = Bitset::intersection_count(common, g.neighbors(z));
        ++out.histogram[count];
        ++out.triple_count;
        if (out.histogram.size() > 1 && out.x < 0) {
          out.x = x;
          out.y = y;
          out.z = z;
          if (!full_histogram) goto done;
        }
      }
    }
  }
done:
  out.exists = out.triple_count > 0 && out.histogram.size() == 1;
  if (out.exists) out.value = out.histogram.begin()->first;
  return out;
}

LemmaReport verify_jmt_recursion(const Graph& g) {
  LemmaReport rep;
  MuGraphCensus census = mu_census(g);
  if (!census.uniform || census.shape->kind != MuShape::Kind::Multipartite ||
      census.shape->t < 2 || census.shape->n < 2) {
    rep.detail = "mu-graph census is not uniformly K_{txn} with t, n >= 2";
    return rep;
  }
  GammaReport gamma = gamma_number(g);
  if (!gamma.exists) {
    rep.detail = "gamma does not exist";
    return rep;
  }
  const long long t = census.shape->t, n = census.shape->n;
  const MuShape want = MuShape::multipartite(t - 1, n);
  for (int x = 0; x < g.vertex_count(); ++x) {
    auto local = induced_subgraph(g, g.neighbors(x));
    if (!local.graph.is_regular()) {
      rep.status = CheckStatus::Fail;
      rep.detail = "local graph at " + std::to_string(x) + " is not regular";
      rep.witness_x = x;
      return rep;
    }
    MuGraphCensus lc = mu_census(local.graph);
    if (!lc.uniform || *lc.shape != want) {
      rep.status = CheckStatus::Fail;
      rep.detail = "local graph at " + std::to_string(x) + " has a mu-graph that is not " +
                   want.to_string();
      rep.witness_x = x;
      return rep;
    }
    GammaReport lg = gamma_number(local.graph);
    if (!lg.exists || lg.value != gamma.value - 1) {
      rep.status = CheckStatus::Fail;
      rep.detail = "gamma of the local graph at " + std::to_string(x) + " is not " +
                   std::to_string(gamma.value - 1);
      rep.witness_x = x;
      return rep;
    }
  }
  rep.status = CheckStatus::Pass;
  std::ostringstream os;
  os << "all local graphs regular with mu-graphs " << want.to_string() << " and gamma "
     << (gamma.value - 1);
  rep.detail = os.str();
  return rep;
}

namespace {

LemmaReport verify_mu_shape(const Graph& g, long long expected_c2, const MuShape& want,
                            const std::string& gate) {
  LemmaReport rep;
  int valency;
  if (!g.is_regular(&valency)) {
    rep.detail = "graph is not regular";
    return rep;
  }
  DistanceMatrix dm = all_pairs_distances(g);
  if (!dm.connected) {
    rep.detail = "graph is disconnected";
    return rep;
  }
  // amply regular: constant lambda on edges, constant c_2 at distance 2
  long long lambda = -1, c2 = -1;
  for (int x = 0; x < g.vertex_count(); ++x) {
    for (int z = x + 1; z < g.vertex_count(); ++z) {
      int dist = dm.at(x, z);
      if (dist != 1 && dist != 2) continue;
      long long common = Bitset::intersection_count(g.neighbors(x), g.neighbors(z));
      long long& slot = dist == 1 ? lambda : c2;
      if (slot < 0)
        slot = common;
      else if (slot != common) {
        rep.detail = "not amply regular: " + std::string(dist == 1 ? "lambda" : "c_2") +
                     " differs at pair (" + std::to_string(x) + "," + std::to_string(z) + ")";
        return rep;
      }
    }
  }
  if (c2 != expected_c2) {
    rep.detail = gate + " (found c_2 = " + std::to_string(c2) + ", expected " +
                 std::to_string(expected_c2) + ")";
    return rep;
  }
  for (int x = 0; x < g.vertex_count(); ++x) {
    for (int z = x + 1; z < g.vertex_count(); ++z) {
      if (dm.at(x, z) != 2) continue;
      auto sub = induced_subgraph(g, g.neighbors(x) & g.neighbors(z));
      MuShape got = [&] {
        if (auto shape = recognize_complete_multipartite(sub.graph))
          return MuShape::multipartite(shape->parts, shape->part_size);
        MuShape s;
        s.kind = MuShape::Kind::Other;
        s.verts = sub.graph.vertex_count();
        s.edges = sub.graph.edge_count();
        return s;
      }();
      if (got != want) {
        rep.status = CheckStatus::Fail;
        rep.detail = "mu-graph of (" + std::to_string(x) + "," + std::to_string(z) + ") is " +
                     got.to_string() + ", expected " + want.to_string();
        rep.witness_x = x;
        rep.witness_z = z;
        return rep;
      }
    }
  }
  rep.status = CheckStatus::Pass;
  rep.detail = "every mu-graph is " + want.to_string();
  return rep;
}

}  // namespace

LemmaReport verify_oa_mu_lemma(const Graph& g, long long m) {
  if (m < 2) throw std::invalid_argument("verify_oa_mu_lemma: m >= 2 required");
  return verify_mu_shape(g, m * m, MuShape::multipartite(m, m), "c_2 != m^2");
}

LemmaReport verify_steiner_mu_lemma(const Graph& g, long long m) {
  if (m < 2) throw std::invalid_argument("verify_steiner_mu_lemma: m >= 2 required");
  return verify_mu_shape(g, m * (m + 1), MuShape::multipartite(m + 1, m), "c_2 != m(m+1)");
}

}  // namespace tightgraphs
