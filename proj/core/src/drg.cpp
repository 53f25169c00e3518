#include "tightgraphs/drg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tightgraphs {

Int IntersectionArray::bi(int i) const {
  if (i < 0 || i > diameter()) throw std::out_of_range("b index");
  return i == diameter() ? Int(0) : b[i];
}

Int IntersectionArray::ci(int i) const {
  if (i < 0 || i > diameter()) throw std::out_of_range("c index");
  return i == 0 ? Int(0) : c[i - 1];
}

std::vector<Int> IntersectionArray::distance_degrees() const {
  std::vector<Int> k(diameter() + 1);
  k[0] = 1;
  for (int i = 0; i < diameter(); ++i) {
    Int num = k[i] * b[i];
    if (num % c[i] != 0)
      throw std::domain_error("distance degree k_" + std::to_string(i + 1) +
                              " is not integral for " + to_string());
    k[i + 1] = num / c[i];
  }
  return k;
}

Int IntersectionArray::vertex_count() const {
  auto k = distance_degrees();
  return std::accumulate(k.begin(), k.end(), Int(0));
}

bool IntersectionArray::all_a_zero() const {
  for (int i = 0; i <= diameter(); ++i)
    if (ai(i) != 0) return false;
  return true;
}

void IntersectionArray::validate() const {
  const int d = diameter();
  if (d < 1) throw std::invalid_argument("intersection array: empty");
  if (static_cast<int>(c.size()) != d)
    throw std::invalid_argument("intersection array: need as many c as b entries");
  if (c[0] != 1) throw std::invalid_argument("intersection array: c_1 must be 1");
  for (int i = 0; i < d; ++i) {
    if (b[i] <= 0) throw std::invalid_argument("intersection array: b_" + std::to_string(i) +
                                               " must be positive");
    if (c[i] <= 0) throw std::invalid_argument("intersection array: c_" + std::to_string(i + 1) +
                                               " must be positive");
  }
  for (int i = 0; i + 1 < d; ++i) {
    if (b[i] < b[i + 1])
      throw std::invalid_argument("intersection array: b must be non-increasing");
    if (c[i] > c[i + 1])
      throw std::invalid_argument("intersection array: c must be non-decreasing");
  }
  for (int i = 0; i <= d; ++i)
    if (ai(i) < 0)
      throw std::invalid_argument("intersection array: a_" + std::to_string(i) + " is negative");
  // Distance-degree integrality is deliberately not checked here: excluded
  // parameter sets are often exactly the ones with no integral degree
  // sequence, and screening them still needs the expanded array.
}

std::string IntersectionArray::to_string() const {
  std::string s = "{";
  for (size_t i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += b[i].str();
  }
  s += ";";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += c[i].str();
  }
  return s + "}";
}

IntersectionArray IntersectionArray::parse(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("intersection array '" + text + "': " + msg);
  };
  if (t.size() < 5 || t.front() != '{' || t.back() != '}') fail("expected {b...;c...}");
  t = t.substr(1, t.size() - 2);
  auto semi = t.find(';');
  if (semi == std::string::npos) fail("missing ';'");
  auto parse_side = [&](const std::string& side) {
    std::vector<Int> out;
    std::string cur;
    std::istringstream ss(side);
    while (std::getline(ss, cur, ',')) {
      if (cur.empty() || cur.find_first_not_of("0123456789") != std::string::npos)
        fail("bad entry '" + cur + "'");
      out.emplace_back(cur);
    }
    if (out.empty()) fail("empty side");
    return out;
  };
  IntersectionArray arr;
  arr.b = parse_side(t.substr(0, semi));
  arr.c = parse_side(t.substr(semi + 1));
  if (arr.b.size() != arr.c.size()) fail("b and c sides differ in length");
  arr.validate();
  return arr;
}

DrgCheck is_distance_regular(const Graph& g) {
  DrgCheck out;
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("is_distance_regular: empty graph");
  DistanceMatrix dm = all_pairs_distances(g);
  if (!dm.connected) throw std::invalid_argument("is_distance_regular: graph is disconnected");
  const int d = dm.diameter;
  std::vector<long long> bv(d + 1, -1), cv(d + 1, -1);

  std::vector<Bitset> level(d + 1, Bitset(n));
  for (int x = 0; x < n; ++x) {
    for (auto& lv : level) lv = Bitset(n);
    const int* row = dm.dist.data() + static_cast<size_t>(x) * n;
    for (int v = 0; v < n; ++v) level[row[v]].set(v);
    for (int y = 0; y < n; ++y) {
      int i = row[y];
      if (i >= 1) {
        long long ci = Bitset::intersection_count(g.neighbors(y), level[i - 1]);
        if (cv[i] < 0)
          cv[i] = ci;
        else if (cv[i] != ci) {
          out.witness = {.reason = "c_" + std::to_string(i) + " is not constant",
                         .x = x, .y = y, .distance = i, .expected = cv[i], .actual = ci};
          return out;
        }
      }
      if (i <= d - 1) {
        long long bi = Bitset::intersection_count(g.neighbors(y), level[i + 1]);
        if (bv[i] < 0)
          bv[i] = bi;
        else if (bv[i] != bi) {
          out.witness = {.reason = "b_" + std::to_string(i) + " is not constant",
                         .x = x, .y = y, .distance = i, .expected = bv[i], .actual = bi};
          return out;
        }
      }
    }
  }
  IntersectionArray arr;
  for (int i = 0; i < d; ++i) arr.b.emplace_back(bv[i]);
  for (int i = 1; i <= d; ++i) arr.c.emplace_back(cv[i]);
  arr.validate();
  out.array = std::move(arr);
  return out;
}

namespace {

// characteristic polynomial of the tridiagonal intersection matrix,
// monic, coefficient vector by ascending power
std::vector<Int> char_poly(const IntersectionArray& arr) {
  const int d = arr.diameter();
  std::vector<Int> prev{1};            // f_{-1}
  std::vector<Int> cur{-arr.ai(0), 1};  // f_0 = x - a_0
  for (int j = 1; j <= d; ++j) {
    // f_j = (x - a_j) f_{j-1} - b_{j-1} c_j f_{j-2}
    std::vector<Int> next(cur.size() + 1, Int(0));
    for (size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += cur[i];
      next[i] -= arr.ai(j) * cur[i];
    }
    Int off = arr.bi(j - 1) * arr.ci(j);
    for (size_t i = 0; i < prev.size(); ++i) next[i] -= off * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Int eval_poly(const std::vector<Int>& p, const Int& x) {
  Int acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// divide p by (x - root); remainder must be zero
std::vector<Int> deflate(const std::vector<Int>& p, const Int& root) {
  std::vector<Int> q(p.size() - 1);
  Int carry = p.back();
  for (size_t i = p.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = p[i] + carry * root;
  }
  if (carry != 0) throw std::logic_error("deflation by a non-root");
  return q;
}

std::vector<double> numeric_eigenvalues(const IntersectionArray& arr) {
  const int d = arr.diameter();
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) {
    t(i, i) = to_double(arr.ai(i));
    if (i < d) {
      double off = std::sqrt(to_double(arr.bi(i)) * to_double(arr.ci(i + 1)));
      t(i, i + 1) = off;
      t(i + 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + d + 1);
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

// u_0 .. u_D at an exact integer eigenvalue
std::vector<Rat> cosine_sequence_exact(const IntersectionArray& arr, const Int& theta) {
  const int d = arr.diameter();
  std::vector<Rat> u(d + 1);
  u[0] = 1;
  if (d >= 1) u[1] = Rat(theta, arr.valency());
  for (int i = 1; i < d; ++i)
    u[i + 1] = (Rat(theta - arr.ai(i)) * u[i] - Rat(arr.ci(i)) * u[i - 1]) / Rat(arr.bi(i));
  return u;
}

std::vector<double> cosine_sequence_numeric(const IntersectionArray& arr, double theta) {
  const int d = arr.diameter();
  std::vector<double> u(d + 1);
  u[0] = 1;
  if (d >= 1) u[1] = theta / to_double(arr.valency());
  for (int i = 1; i < d; ++i)
    u[i + 1] = ((theta - to_double(arr.ai(i))) * u[i] - to_double(arr.ci(i)) * u[i - 1]) /
               to_double(arr.bi(i));
  return u;
}

}  // namespace

Spectrum spectrum_from_array(const IntersectionArray& arr) {
  arr.validate();
  const int d = arr.diameter();
  const Int v = arr.vertex_count();
  const std::vector<Int> kdeg = arr.distance_degrees();

  std::vector<Int> poly = char_poly(arr);
  std::vector<double> approx = numeric_eigenvalues(arr);

  Spectrum spec;
  spec.vertex_count = v;
  std::vector<std::pair<double, std::optional<Int>>> roots;  // descending
  std::vector<Int> work = poly;
  for (double x : approx) {
    std::optional<Int> exact;
    if (std::abs(x) < 9e15) {
      Int cand = Int(static_cast<long long>(std::llround(x)));
      if (work.size() > 1 && eval_poly(work, cand) == 0) {
        exact = cand;
        work = deflate(work, cand);
      }
    }
    roots.emplace_back(x, exact);
  }
  spec.all_integral =
      std::all_of(roots.begin(), roots.end(), [](const auto& r) { return r.second.has_value(); });

  // eigenvalues of the intersection matrix are simple; the largest is the valency
  if (roots.front().second.has_value() && *roots.front().second != arr.valency())
    throw std::domain_error("valency is not the top eigenvalue of " + arr.to_string());

  Int mult_total = 0;
  double weighted = 0.0;
  for (auto& [x, exact] : roots) {
    Eigenvalue ev;
    ev.approx = x;
    if (exact) {
      ev.integral = true;
      ev.exact = *exact;
      ev.approx = to_double(*exact);
      std::vector<Rat> u = cosine_sequence_exact(arr, *exact);
      Rat denom = 0;
      for (int j = 0; j <= d; ++j) denom += Rat(kdeg[j]) * u[j] * u[j];
      Rat m = Rat(v) / denom;
      if (!rat_is_integer(m) || m <= 0)
        throw std::domain_error("multiplicity of eigenvalue " + exact->str() + " is " + m.str() +
                                ", not a positive integer; parameter set " + arr.to_string() +
                                " is inconsistent");
      ev.multiplicity = rat_num(m);
    } else {
      std::vector<double> u = cosine_sequence_numeric(arr, x);
      double denom = 0;
      for (int j = 0; j <= d; ++j) denom += to_double(kdeg[j]) * u[j] * u[j];
      double m = to_double(v) / denom;
      double rounded = std::round(m);
      if (rounded < 1 || std::abs(m - rounded) > 1e-6 * std::max(1.0, rounded))
        throw std::domain_error("multiplicity " + std::to_string(m) + " of eigenvalue " +
                                std::to_string(x) + " is not near a positive integer in " +
                                arr.to_string());
      ev.multiplicity = Int(static_cast<long long>(rounded));
    }
    mult_total += ev.multiplicity;
    weighted += to_double(ev.multiplicity) * ev.approx;
    spec.eigenvalues.push_back(std::move(ev));
  }
  if (mult_total != v)
    throw std::domain_error("multiplicities sum to " + mult_total.str() + ", expected " +
                            v.str() + " for " + arr.to_string());
  double scale = std::max(1.0, to_double(v) * std::abs(spec.eigenvalues.front().approx));
  if (std::abs(weighted) > 1e-6 * scale)
    throw std::domain_error("trace check failed for " + arr.to_string());
  if (spec.eigenvalues.front().multiplicity != 1)
    throw std::domain_error("top eigenvalue must be simple in " + arr.to_string());
  return spec;
}

TightReport tightness_test(const IntersectionArray& arr, const Spectrum& spec, bool bipartite) {
  const int d = arr.diameter();
  if (d < 3)
    throw std::invalid_argument("tightness is defined for diameter >= 3, got " +
                                std::to_string(d));
  if (static_cast<int>(spec.eigenvalues.size()) != d + 1)
    throw std::invalid_argument("spectrum does not match the array's diameter");

  const Int k = arr.valency();
  const Int a1 = arr.ai(1);
  const Int b1 = arr.bi(1);
  const Eigenvalue& t1 = spec.eigenvalues[1];
  const Eigenvalue& td = spec.eigenvalues[d];

  TightReport rep;
  rep.bipartite = bipartite;
  rep.exact = t1.integral && td.integral;
  if (rep.exact) {
    if (t1.exact == -1 || td.exact == -1)
      throw std::domain_error("degenerate eigenvalue -1 in tightness test");
    Rat shift = Rat(k, a1 + 1);
    rep.lhs = (Rat(t1.exact) + shift) * (Rat(td.exact) + shift);
    rep.rhs = Rat(-k * a1 * b1, (a1 + 1) * (a1 + 1));
    rep.equality = rep.lhs == rep.rhs;
    rep.lhs_approx = to_double(rep.lhs);
    rep.rhs_approx = to_double(rep.rhs);
    rep.b_parameter = Rat(b1) / (Rat(1) + Rat(t1.exact));
    rep.local_r = Rat(-1) - Rat(b1) / (Rat(1) + Rat(td.exact));
    rep.local_s = Rat(-1) - rep.b_parameter;
    rep.b_approx = to_double(rep.b_parameter);
    rep.local_r_approx = to_double(rep.local_r);
    rep.local_s_approx = to_double(rep.local_s);
  } else {
    double shift = to_double(k) / (to_double(a1) + 1);
    double th1 = t1.approx, thd = td.approx;
    if (std::abs(1 + th1) < 1e-12 || std::abs(1 + thd) < 1e-12)
      throw std::domain_error("degenerate eigenvalue -1 in tightness test");
    rep.lhs_approx = (th1 + shift) * (thd + shift);
    rep.rhs_approx = -to_double(Int(k * a1 * b1)) / ((to_double(a1) + 1) * (to_double(a1) + 1));
    rep.equality =
        std::abs(rep.lhs_approx - rep.rhs_approx) <= 1e-6 * std::max(1.0, std::abs(rep.rhs_approx));
    rep.b_approx = to_double(b1) / (1 + th1);
    rep.local_r_approx = -1 - to_double(b1) / (1 + thd);
    rep.local_s_approx = -1 - rep.b_approx;
  }
  rep.tight = rep.equality && !bipartite;
  return rep;
}

LocalGraphReport local_graph_report(const Graph& g, int x, const TightReport* tight) {
  if (x < 0 || x >= g.vertex_count()) throw std::out_of_range("vertex out of range");
  LocalGraphReport rep;
  rep.vertex = x;
  auto sub = induced_subgraph(g, g.neighbors(x));
  rep.local = std::move(sub.graph);
  rep.srg = srg_params_from_graph(rep.local);
  if (tight && rep.srg.ok()) {
    const SrgParams& p = *rep.srg.params;
    if (tight->exact && p.integral)
      rep.matches_prediction = Rat(p.r_int) == tight->local_r && Rat(p.s_int) == tight->local_s;
    else
      rep.matches_prediction = std::abs(p.r_approx - tight->local_r_approx) < 1e-6 &&
                               std::abs(p.s_approx - tight->local_s_approx) < 1e-6;
  }
  return rep;
}

double KreinTensor::max_abs() const {
  double m = 0;
  for (double x : q) m = std::max(m, std::abs(x));
  return m;
}

EigenmatrixPair krein_parameters(const IntersectionArray& arr, const Spectrum& spec) {
  const int d = arr.diameter();
  if (static_cast<int>(spec.eigenvalues.size()) != d + 1)
    throw std::invalid_argument("spectrum does not match the array's diameter");
  const std::vector<Int> kdeg = arr.distance_degrees();
  const double v = to_double(spec.vertex_count);

  EigenmatrixPair out;
  out.P = DMat{d + 1, d + 1, std::vector<double>(static_cast<size_t>(d + 1) * (d + 1))};
  for (int i = 0; i <= d; ++i) {
    std::vector<double> u = cosine_sequence_numeric(arr, spec.eigenvalues[i].approx);
    for (int j = 0; j <= d; ++j) out.P.at(i, j) = u[j] * to_double(kdeg[j]);
  }

  Eigen::MatrixXd p(d + 1, d + 1);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) p(i, j) = out.P.at(i, j);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(p);
  if (!lu.isInvertible()) throw std::domain_error("eigenmatrix P is singular");
  Eigen::MatrixXd q = v * lu.inverse();
  out.Q = DMat{d + 1, d + 1, std::vector<double>(static_cast<size_t>(d + 1) * (d + 1))};
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) out.Q.at(i, j) = q(i, j);

  out.krein.d = d;
  out.krein.q.assign(static_cast<size_t>(d + 1) * (d + 1) * (d + 1), 0.0);
  std::vector<double> mult(d + 1);
  for (int i = 0; i <= d; ++i) mult[i] = to_double(spec.eigenvalues[i].multiplicity);
  for (int h = 0; h <= d; ++h)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) {
        double sum = 0;
        for (int u = 0; u <= d; ++u) {
          double ku = to_double(kdeg[u]);
          sum += out.P.at(i, u) * out.P.at(j, u) * out.P.at(h, u) / (ku * ku);
        }
        out.krein.at(h, i, j) = mult[i] * mult[j] / v * sum;
      }

  // Q-polynomial orderings: permutations of the nontrivial eigenspaces
  const double zero_tol = 1e-7 * out.krein.max_abs();
  auto is_zero = [&](double x) { return std::abs(x) <= zero_tol; };
  std::vector<int> perm(d + 1);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int h = 0; h <= d && ok; ++h)
      for (int j = 0; j <= d && ok; ++j) {
        if (h == j) continue;
        bool zero = is_zero(out.krein.at(perm[h], perm[1], perm[j]));
        bool want_zero = std::abs(h - j) != 1;
        if (zero != want_zero) ok = false;
      }
    if (ok) out.q_polynomial_orderings.push_back(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

Int moore_bound(long long k, int diameter) {
  if (k < 2 || diameter < 1) throw std::invalid_argument("moore bound needs k >= 2, D >= 1");
  Int sum = 0, pw = 1;
  for (int i = 0; i < diameter; ++i) {
    sum += pw;
    pw *= (k - 1);
  }
  return 1 + Int(k) * sum;
}

}  // namespace tightgraphs
