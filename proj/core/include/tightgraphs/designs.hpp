#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tightgraphs/graph.hpp"

namespace tightgraphs {

// Orthogonal array OA(m, n): m rows, n^2 columns, entries 0..n-1, every
// ordered symbol pair appears exactly once in every pair of rows.
struct OrthogonalArray {
  int m = 0;
  int n = 0;
  std::vector<std::vector<int>> rows;  // m rows of n^2 entries

  int columns() const { return n * n; }
};

// Construction from the cyclic Latin squares over Z_n, n prime: rows 0 and 1
// are the coordinate projections of the column index (i, j), row 2+a is
// (a+1)*i + j mod n. Columns in row-major order of (i, j).
// Throws std::invalid_argument unless n is prime and 2 <= m <= n+1.
OrthogonalArray build_orthogonal_array(int m, int n);

// Exhaustive pair check over all row pairs; also used by tests as the
// independent validity oracle.
bool orthogonal_array_valid(const OrthogonalArray& oa, std::string* why = nullptr);

// m lines of n^2 space-separated symbols.
void write_orthogonal_array(std::ostream& out, const OrthogonalArray& oa);

// 2-design S(2, m, n): blocks of size m on points 0..n-1, every point pair
// in exactly one block.
struct SteinerSystem {
  int m = 0;  // block size
  int n = 0;  // points
  std::vector<std::vector<int>> blocks;  // each sorted ascending

  int replication() const { return (n - 1) / (m - 1); }
  bool symmetric() const { return static_cast<long long>(blocks.size()) == n; }
};

// Affine plane AG(2, q) = S(2, q, q^2), q prime. Lines grouped by parallel
// class: slopes 0..q-1 first, then the vertical class.
SteinerSystem build_affine_plane(int q);

// All 2-subsets of a v-set: S(2, 2, v), v >= 3.
SteinerSystem build_pair_design(int v);

// Projective plane PG(2, q) = S(2, q+1, q^2+q+1), q prime. Symmetric: every
// two blocks meet, so its block graph is complete.
SteinerSystem build_projective_plane(int q);

bool steiner_system_valid(const SteinerSystem& s, std::string* why = nullptr);

// One block per line, points space-separated.
void write_steiner_system(std::ostream& out, const SteinerSystem& s);

// Named cliques that realize the Delsarte bound in a block graph.
struct CanonicalCliqueFamily {
  std::vector<std::vector<int>> cliques;  // vertex index lists, sorted
  std::vector<std::string> names;
};

// Block graph of an OA: vertices are columns, adjacent iff they share a
// symbol in some row. Canonical cliques: for each (row, symbol) the n
// columns carrying that symbol; every vertex lies in exactly m of them.
struct OaBlockGraph {
  Graph graph;
  CanonicalCliqueFamily cliques;
};
OaBlockGraph block_graph_of_oa(const OrthogonalArray& oa);

// Block graph of a Steiner system: vertices are blocks, adjacent iff the
// blocks share a point. Canonical cliques: for each point, the blocks
// through it. For a symmetric system the graph is complete and carries no
// strongly regular structure; the flag records that.
struct SteinerBlockGraph {
  Graph graph;
  CanonicalCliqueFamily cliques;
  bool symmetric_design = false;
};
SteinerBlockGraph block_graph_of_steiner(const SteinerSystem& s);

}  // namespace tightgraphs
