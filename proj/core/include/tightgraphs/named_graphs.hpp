#pragma once

#include <string>

#include "tightgraphs/graph.hpp"

namespace tightgraphs {

// Vertices: k-subsets of {0..n-1} in colex order, adjacent iff the subsets
// meet in k-1 points. Requires 0 < k < n.
Graph johnson(int n, int k);

// Vertices: even-weight binary n-vectors (2^{n-1} of them, increasing as
// integers), adjacent iff Hamming distance 2. Requires 2 <= n <= 20.
Graph halved_cube(int n);

// Vertices: 2-subsets of {0..n-1} in colex order, adjacent iff disjoint.
// Requires n >= 5. kneser2(5) is the Petersen graph.
Graph kneser2(int n);

// Vertices: words of length d over {0..q-1}, adjacent iff Hamming distance 1.
Graph hamming(int d, int q);

// hamming(n, 2)
Graph hypercube(int n);

// t parts of size n, edges exactly between distinct parts.
Graph complete_multipartite(int t, int n);

// Collinearity graph of the generalized quadrangle of order (2,2): the 15
// 2-subsets of a 6-set, adjacent iff disjoint. Strongly regular (15,6,1,3).
Graph gq22_point_graph();

// Doubles a graph delta on k vertices into a 2(k+1)-vertex antipodal graph:
// two copies of delta plus an apex over each copy, cross edges between
// distinct non-adjacent vertices. The input must be strongly regular with
// parameters (k, a1, (3*a1-k-1)/2, a1/2); the result is verified to be
// distance-regular with intersection array {k, k-a1-1, 1; 1, k-a1-1, k} and
// the construction throws std::invalid_argument (precondition) or
// std::runtime_error (postcondition) otherwise.
Graph taylor_double(const Graph& delta);

}  // namespace tightgraphs
