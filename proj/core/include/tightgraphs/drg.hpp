#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tightgraphs/graph.hpp"
#include "tightgraphs/numeric.hpp"
#include "tightgraphs/srg.hpp"

namespace tightgraphs {

// Intersection array {b_0, ..., b_{D-1}; c_1, ..., c_D}. Entries are exact
// integers; parameter-level inputs can be far larger than any graph we
// would ever build.
struct IntersectionArray {
  std::vector<Int> b;  // b_0 .. b_{D-1}
  std::vector<Int> c;  // c_1 .. c_D

  int diameter() const { return static_cast<int>(b.size()); }
  const Int& valency() const { return b[0]; }
  Int bi(int i) const;           // b_i with b_D = 0
  Int ci(int i) const;           // c_i with c_0 = 0
  Int ai(int i) const { return valency() - bi(i) - ci(i); }

  // k_0 = 1, k_{i+1} = k_i b_i / c_{i+1}; throws when not integral.
  std::vector<Int> distance_degrees() const;
  Int vertex_count() const;

  bool all_a_zero() const;  // bipartite at parameter level

  // Structural sanity: positive b_i (i < D), positive c_i, c_1 = 1,
  // nonnegative a_i, monotonicity c_i <= c_{i+1}, b_i >= b_{i+1}.
  void validate() const;

  // "{b0,b1,...;c1,c2,...}" with no spaces
  std::string to_string() const;
  static IntersectionArray parse(const std::string& text);

  bool operator==(const IntersectionArray&) const = default;
};

struct NotDrgWitness {
  std::string reason;
  int x = -1, y = -1;  // first offending pair
  int distance = -1;
  long long expected = -1, actual = -1;
};

struct DrgCheck {
  std::optional<IntersectionArray> array;
  std::optional<NotDrgWitness> witness;
  bool ok() const { return array.has_value(); }
};

// Definition check: for every pair (x, y) at distance i the counts
// |N(y) cap G_{i-1}(x)| and |N(y) cap G_{i+1}(x)| depend only on i.
// Throws std::invalid_argument if g is disconnected.
DrgCheck is_distance_regular(const Graph& g);

struct Eigenvalue {
  bool integral = false;
  Int exact;          // valid when integral
  double approx = 0.0;
  Int multiplicity;
};

struct Spectrum {
  std::vector<Eigenvalue> eigenvalues;  // strictly decreasing
  bool all_integral = false;
  Int vertex_count;

  double theta(int i) const { return eigenvalues[i].approx; }
};

// Eigenvalues of the tridiagonal intersection matrix with multiplicities
// from the standard sequence u_0 = 1, u_1 = theta/k,
// c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i,
// m(theta) = v / sum_j k_j u_j(theta)^2.
// Integer eigenvalues are recovered exactly (monic integer characteristic
// polynomial, synthetic deflation); any remainder falls back to a
// symmetrized numeric solve. Throws std::domain_error when multiplicities
// fail to be positive integers (inconsistent parameter set).
Spectrum spectrum_from_array(const IntersectionArray& arr);

// Fundamental bound report for diameter >= 3:
//   (theta_1 + k/(a_1+1)) (theta_D + k/(a_1+1)) >= -k a_1 b_1 / (a_1+1)^2
// with equality (on a nonbipartite graph) defining tightness. The local
// eigenvalue predictions r = -1 - b_1/(1+theta_D), s = -1 - b_1/(1+theta_1)
// and b = b_1/(1+theta_1) ride along.
struct TightReport {
  bool exact = false;           // rational path (integral spectrum)
  Rat lhs, rhs;                 // valid when exact
  double lhs_approx = 0.0, rhs_approx = 0.0;
  bool bipartite = false;
  bool equality = false;
  bool tight = false;           // equality and not bipartite
  Rat b_parameter;              // b_1/(1+theta_1), valid when exact
  Rat local_r, local_s;         // predicted local eigenvalues, valid when exact
  double b_approx = 0.0, local_r_approx = 0.0, local_s_approx = 0.0;
};

// Throws std::invalid_argument when diameter < 3 and std::domain_error on
// the 1 + theta = 0 degeneracies.
TightReport tightness_test(const IntersectionArray& arr, const Spectrum& spec,
                           bool bipartite);

struct LocalGraphReport {
  int vertex = -1;
  Graph local;
  SrgCheck srg;
  // When a tight report is supplied and the local graph is SRG with
  // integral eigenvalues: do r, s match the predictions.
  std::optional<bool> matches_prediction;
};

LocalGraphReport local_graph_report(const Graph& g, int x,
                                    const TightReport* tight = nullptr);

// Dense row-major matrix, small orders only.
struct DMat {
  int rows = 0, cols = 0;
  std::vector<double> a;
  double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
};

struct KreinTensor {
  int d = 0;  // classes
  std::vector<double> q;  // (d+1)^3, q[h][i][j]
  double at(int h, int i, int j) const {
    return q[(static_cast<size_t>(h) * (d + 1) + i) * (d + 1) + j];
  }
  double& at(int h, int i, int j) {
    return q[(static_cast<size_t>(h) * (d + 1) + i) * (d + 1) + j];
  }
  double max_abs() const;
};

struct EigenmatrixPair {
  DMat P, Q;            // Q = v * P^{-1}
  KreinTensor krein;    // q^h_{ij} = (m_i m_j / v) sum_u P_iu P_ju P_hu / k_u^2
  // Eigenvalue orderings (permutations of 1..D, index 0 fixed) under which
  // q^h_{1,j} = 0 exactly when |h-j| != 1 for distinct h, j. Zero means
  // |q| < 1e-7 * max|q|.
  std::vector<std::vector<int>> q_polynomial_orderings;
};

// Throws std::domain_error if P is numerically singular.
EigenmatrixPair krein_parameters(const IntersectionArray& arr, const Spectrum& spec);

// 1 + k sum_{i=0}^{D-1} (k-1)^i, the distance-regularity floor on vertex
// count for valency k and diameter D; k = 2 gives 2D+1.
Int moore_bound(long long k, int diameter);

}  // namespace tightgraphs
