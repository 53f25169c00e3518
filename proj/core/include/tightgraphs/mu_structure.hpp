#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tightgraphs/graph.hpp"

namespace tightgraphs {

// Canonical description of a common-neighborhood graph. Multipartite covers
// t >= 1 (t == 1 is the coclique K_{1xn}); Srg is the fallback for connected
// strongly regular non-multipartite shapes; anything else is keyed by crude
// invariants.
struct MuShape {
  enum class Kind { Multipartite, Srg, Other };
  Kind kind = Kind::Other;
  long long t = 0, n = 0;                      // Multipartite
  long long v = 0, k = 0, lambda = 0, mu = 0;  // Srg
  long long verts = 0, edges = 0, min_deg = 0, max_deg = 0;  // Other

  static MuShape multipartite(long long t, long long n);
  std::string to_string() const;
  auto operator<=>(const MuShape&) const = default;
};

// Induced graph on the common neighborhood of x and z.
// Throws std::invalid_argument unless d(x, z) == 2.
InducedSubgraph mu_graph(const Graph& g, int x, int z);

struct MuGraphCensus {
  std::map<MuShape, long long> counts;
  long long pair_count = 0;  // unordered distance-2 pairs
  bool uniform = false;
  std::optional<MuShape> shape;  // when uniform
};

// Classifies the mu-graph of every unordered distance-2 pair.
// Precondition: g connected.
MuGraphCensus mu_census(const Graph& g);

struct GammaReport {
  bool exists = false;
  long long value = 0;        // when exists
  long long triple_count = 0; // triples examined
  std::map<long long, long long> histogram;
  // first deviating triple when not constant
  int x = -1, y = -1, z = -1;
};

// |N(x) cap N(y) cap N(z)| over triples with x ~ y and d(x,z) = d(y,z) = 2,
// x < y. Exists iff at least one triple occurs and the count is constant.
// Scanning stops at the first deviation unless full_histogram is set.
GammaReport gamma_number(const Graph& g, bool full_histogram = false);

enum class CheckStatus { Pass, Fail, Inapplicable };

struct LemmaReport {
  CheckStatus status = CheckStatus::Inapplicable;
  std::string detail;
  int witness_x = -1, witness_z = -1;
};

// For a graph whose mu-graphs are uniformly K_{txn} (t, n >= 2) and whose
// gamma exists: checks at every vertex that the local graph is regular,
// has all mu-graphs K_{(t-1)xn}, and has gamma one less.
LemmaReport verify_jmt_recursion(const Graph& g);

// Caller attests g is amply regular and locally an OA-type block graph with
// smallest local eigenvalue -m. Inapplicable unless c_2 = m^2; then every
// mu-graph must be K_{mxm}.
LemmaReport verify_oa_mu_lemma(const Graph& g, long long m);

// Same with c_2 = m(m+1) and target shape K_{(m+1)xm}.
LemmaReport verify_steiner_mu_lemma(const Graph& g, long long m);

}  // namespace tightgraphs
