#include "tightgraphs/named_graphs.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "tightgraphs/drg.hpp"
#include "tightgraphs/srg.hpp"

namespace tightgraphs {

namespace {

// all k-subsets of {0..n-1} in colex order: indicator words ascending
std::vector<unsigned> subsets_colex(int n, int k) {
  std::vector<unsigned> out;
  for (unsigned w = 0; w < (1u << n); ++w)
    if (std::popcount(w) == k) out.push_back(w);
  return out;
}

std::string subset_label(unsigned w, int n) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i)
    if (w & (1u << i)) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
  return s + "}";
}

}  // namespace

Graph johnson(int n, int k) {
  if (n > 24 || k <= 0 || k >= n)
    throw std::invalid_argument("johnson(n,k): need 0 < k < n <= 24");
  auto verts = subsets_colex(n, k);
  Graph g(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i) g.set_label(static_cast<int>(i), subset_label(verts[i], n));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (std::popcount(verts[i] & verts[j]) == k - 1)
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

Graph halved_cube(int n) {
  if (n < 2 || n > 20) throw std::invalid_argument("halved_cube(n): need 2 <= n <= 20");
  std::vector<unsigned> verts;
  for (unsigned w = 0; w < (1u << n); ++w)
    if (std::popcount(w) % 2 == 0) verts.push_back(w);
  Graph g(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i) {
    std::string label(n, '0');
    for (int b = 0; b < n; ++b)
      if (verts[i] & (1u << b)) label[b] = '1';
    g.set_label(static_cast<int>(i), label);
  }
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (std::popcount(verts[i] ^ verts[j]) == 2)
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

Graph kneser2(int n) {
  if (n < 5 || n > 24) throw std::invalid_argument("kneser2(n): need 5 <= n <= 24");
  auto verts = subsets_colex(n, 2);
  Graph g(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i) g.set_label(static_cast<int>(i), subset_label(verts[i], n));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if ((verts[i] & verts[j]) == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

Graph hamming(int d, int q) {
  if (d < 1 || q < 2) throw std::invalid_argument("hamming(d,q): need d >= 1, q >= 2");
  double size = 1;
  for (int i = 0; i < d; ++i) size *= q;
  if (size > 5000) throw std::invalid_argument("hamming(d,q): q^d exceeds 5000 vertices");
  const int n = static_cast<int>(size);
  Graph g(n);
  auto digits = [&](int v) {
    std::vector<int> out(d);
    for (int i = d - 1; i >= 0; --i) {
      out[i] = v % q;
      v /= q;
    }
    return out;
  };
  for (int v = 0; v < n; ++v) {
    auto dv = digits(v);
    std::string label = "(";
    for (int i = 0; i < d; ++i) {
      if (i) label += ",";
      label += std::to_string(dv[i]);
    }
    g.set_label(v, label + ")");
  }
  for (int u = 0; u < n; ++u) {
    auto du = digits(u);
    for (int v = u + 1; v < n; ++v) {
      auto dv = digits(v);
      int diff = 0;
      for (int i = 0; i < d; ++i) diff += du[i] != dv[i];
      if (diff == 1) g.add_edge(u, v);
    }
  }
  return g;
}

Graph hypercube(int n) { return hamming(n, 2); }

Graph complete_multipartite(int t, int n) {
  if (t < 1 || n < 1) throw std::invalid_argument("complete_multipartite(t,n): positive sizes");
  if (static_cast<long long>(t) * n > 5000)
    throw std::invalid_argument("complete_multipartite(t,n): too many vertices");
  Graph g(t * n);
  for (int p = 0; p < t; ++p)
    for (int i = 0; i < n; ++i) g.set_label(p * n + i, "p" + std::to_string(p) + "v" + std::to_string(i));
  for (int u = 0; u < t * n; ++u)
    for (int v = u + 1; v < t * n; ++v)
      if (u / n != v / n) g.add_edge(u, v);
  return g;
}

Graph gq22_point_graph() { return kneser2(6); }

Graph taylor_double(const Graph& delta) {
  const int k = delta.vertex_count();
  SrgCheck srg = srg_params_from_graph(delta);
  if (!srg.ok())
    throw std::invalid_argument("taylor_double: base graph is not strongly regular (" +
                                srg.witness->reason + ")");
  const SrgParams& p = *srg.params;
  const long long a1 = p.k;
  const long long c2 = k - a1 - 1;
  // the local relations the doubled graph needs
  if (2 * p.lambda != 3 * a1 - k - 1 || 2 * p.mu != a1)
    throw std::invalid_argument(
        "taylor_double: base graph violates the local relations lambda = (3a_1-k-1)/2, "
        "mu = a_1/2");
  if (c2 < 1 || c2 >= k - 1)
    throw std::invalid_argument("taylor_double: c_2 = " + std::to_string(c2) +
                                " out of range (antipodal 2-cover would degenerate)");

  // vertices: (infinity, eps) at index eps*(k+1), copy eps of base vertex i
  // at eps*(k+1)+1+i
  Graph g(2 * (k + 1));
  auto apex = [&](int eps) { return eps * (k + 1); };
  auto node = [&](int eps, int i) { return eps * (k + 1) + 1 + i; };
  for (int eps = 0; eps < 2; ++eps) {
    g.set_label(apex(eps), "inf" + std::to_string(eps));
    for (int i = 0; i < k; ++i)
      g.set_label(node(eps, i), delta.label(i) + (eps ? "'" : ""));
    for (int i = 0; i < k; ++i) {
      g.add_edge(apex(eps), node(eps, i));
      for (int j = i + 1; j < k; ++j)
        if (delta.adjacent(i, j)) g.add_edge(node(eps, i), node(eps, j));
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && !delta.adjacent(i, j)) g.add_edge(node(0, i), node(1, j));

  DrgCheck check = is_distance_regular(g);
  IntersectionArray want;
  want.b = {Int(k), Int(c2), Int(1)};
  want.c = {Int(1), Int(c2), Int(k)};
  if (!check.ok())
    throw std::runtime_error("taylor_double: result is not distance-regular (" +
                             check.witness->reason + " at pair " +
                             std::to_string(check.witness->x) + "," +
                             std::to_string(check.witness->y) + ")");
  if (*check.array != want)
    throw std::runtime_error("taylor_double: built " + check.array->to_string() +
                             ", expected " + want.to_string());
  return g;
}

}  // namespace tightgraphs
