#include "tightgraphs/designs.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>

namespace tightgraphs {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string block_label(const std::vector<int>& block) {
  std::string s = "{";
  for (size_t i = 0; i < block.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(block[i]);
  }
  return s + "}";
}

}  // namespace

OrthogonalArray build_orthogonal_array(int m, int n) {
  if (!is_prime(n))
    throw std::invalid_argument("OA(" + std::to_string(m) + "," + std::to_string(n) +
                                "): n must be prime for the cyclic construction");
  if (m < 2 || m > n + 1)
    throw std::invalid_argument("OA(" + std::to_string(m) + "," + std::to_string(n) +
                                "): need 2 <= m <= n+1");
  OrthogonalArray oa;
  oa.m = m;
  oa.n = n;
  oa.rows.assign(m, std::vector<int>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int col = i * n + j;
      oa.rows[0][col] = i;
      oa.rows[1][col] = j;
      for (int a = 1; a + 1 < m; ++a) oa.rows[a + 1][col] = (a * i + j) % n;
    }
  }
  return oa;
}

bool orthogonal_array_valid(const OrthogonalArray& oa, std::string* why) {
  const int n = oa.n, cols = n * n;
  if (oa.m < 2 || static_cast<int>(oa.rows.size()) != oa.m) {
    if (why) *why = "row count mismatch";
    return false;
  }
  for (const auto& row : oa.rows) {
    if (static_cast<int>(row.size()) != cols) {
      if (why) *why = "column count mismatch";
      return false;
    }
    for (int e : row)
      if (e < 0 || e >= n) {
        if (why) *why = "entry out of range";
        return false;
      }
  }
  for (int r = 0; r < oa.m; ++r) {
    for (int r2 = r + 1; r2 < oa.m; ++r2) {
      std::vector<char> seen(static_cast<size_t>(n) * n, 0);
      for (int c = 0; c < cols; ++c) {
        int key = oa.rows[r][c] * n + oa.rows[r2][c];
        if (seen[key]) {
          if (why)
            *why = "rows " + std::to_string(r) + "," + std::to_string(r2) +
                   " repeat a pair at column " + std::to_string(c);
          return false;
        }
        seen[key] = 1;
      }
    }
  }
  return true;
}

void write_orthogonal_array(std::ostream& out, const OrthogonalArray& oa) {
  for (const auto& row : oa.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << row[c];
    }
    out << '\n';
  }
}

SteinerSystem build_affine_plane(int q) {
  if (!is_prime(q)) throw std::invalid_argument("affine plane: q must be prime");
  SteinerSystem s;
  s.m = q;
  s.n = q * q;
  // point (x, y) -> x*q + y
  for (int slope = 0; slope < q; ++slope) {
    for (int b = 0; b < q; ++b) {
      std::vector<int> block;
      for (int x = 0; x < q; ++x) block.push_back(x * q + (slope * x + b) % q);
      std::sort(block.begin(), block.end());
      s.blocks.push_back(std::move(block));
    }
  }
  for (int c = 0; c < q; ++c) {
    std::vector<int> block;
    for (int y = 0; y < q; ++y) block.push_back(c * q + y);
    s.blocks.push_back(std::move(block));
  }
  return s;
}

SteinerSystem build_pair_design(int v) {
  if (v < 3) throw std::invalid_argument("pair design: need v >= 3");
  SteinerSystem s;
  s.m = 2;
  s.n = v;
  // colex order
  for (int b = 1; b < v; ++b)
    for (int a = 0; a < b; ++a) s.blocks.push_back({a, b});
  return s;
}

SteinerSystem build_projective_plane(int q) {
  if (!is_prime(q)) throw std::invalid_argument("projective plane: q must be prime");
  // normalized homogeneous coordinates over Z_q:
  // (1, a, b), then (0, 1, a), then (0, 0, 1)
  std::vector<std::array<int, 3>> points;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) points.push_back({1, a, b});
  for (int a = 0; a < q; ++a) points.push_back({0, 1, a});
  points.push_back({0, 0, 1});

  SteinerSystem s;
  s.m = q + 1;
  s.n = static_cast<int>(points.size());
  for (const auto& line : points) {  // self-dual: same enumeration
    std::vector<int> block;
    for (int p = 0; p < s.n; ++p) {
      int dot = (line[0] * points[p][0] + line[1] * points[p][1] + line[2] * points[p][2]) % q;
      if (dot == 0) block.push_back(p);
    }
    std::sort(block.begin(), block.end());
    s.blocks.push_back(std::move(block));
  }
  return s;
}

bool steiner_system_valid(const SteinerSystem& s, std::string* why) {
  if (s.m < 2 || s.n < s.m) {
    if (why) *why = "degenerate parameters";
    return false;
  }
  if ((s.n - 1) % (s.m - 1) != 0 ||
      (static_cast<long long>(s.n) * (s.n - 1)) % (static_cast<long long>(s.m) * (s.m - 1)) != 0) {
    if (why) *why = "divisibility conditions fail";
    return false;
  }
  std::vector<char> covered(static_cast<size_t>(s.n) * s.n, 0);
  for (size_t bi = 0; bi < s.blocks.size(); ++bi) {
    const auto& block = s.blocks[bi];
    if (static_cast<int>(block.size()) != s.m) {
      if (why) *why = "block " + std::to_string(bi) + " has wrong size";
      return false;
    }
    for (int p : block)
      if (p < 0 || p >= s.n) {
        if (why) *why = "point out of range in block " + std::to_string(bi);
        return false;
      }
    for (size_t i = 0; i < block.size(); ++i) {
      for (size_t j = i + 1; j < block.size(); ++j) {
        auto& c = covered[static_cast<size_t>(block[i]) * s.n + block[j]];
        if (c) {
          if (why)
            *why = "pair {" + std::to_string(block[i]) + "," + std::to_string(block[j]) +
                   "} covered twice";
          return false;
        }
        c = 1;
      }
    }
  }
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j)
      if (!covered[static_cast<size_t>(i) * s.n + j]) {
        if (why) *why = "pair {" + std::to_string(i) + "," + std::to_string(j) + "} uncovered";
        return false;
      }
  return true;
}

void write_steiner_system(std::ostream& out, const SteinerSystem& s) {
  for (const auto& block : s.blocks) {
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) out << ' ';
      out << block[i];
    }
    out << '\n';
  }
}

OaBlockGraph block_graph_of_oa(const OrthogonalArray& oa) {
  std::string why;
  if (!orthogonal_array_valid(oa, &why))
    throw std::invalid_argument("block_graph_of_oa: invalid array: " + why);
  const int cols = oa.columns();
  OaBlockGraph out;
  out.graph = Graph(cols);
  for (int c = 0; c < cols; ++c)
    out.graph.set_label(c, "(" + std::to_string(oa.rows[0][c]) + "," +
                               std::to_string(oa.rows[1][c]) + ")");
  for (int r = 0; r < oa.m; ++r) {
    for (int sym = 0; sym < oa.n; ++sym) {
      std::vector<int> clique;
      for (int c = 0; c < cols; ++c)
        if (oa.rows[r][c] == sym) clique.push_back(c);
      for (size_t i = 0; i < clique.size(); ++i)
        for (size_t j = i + 1; j < clique.size(); ++j)
          out.graph.add_edge(clique[i], clique[j]);
      out.cliques.cliques.push_back(std::move(clique));
      out.cliques.names.push_back("r" + std::to_string(r) + "s" + std::to_string(sym));
    }
  }
  return out;
}

SteinerBlockGraph block_graph_of_steiner(const SteinerSystem& s) {
  std::string why;
  if (!steiner_system_valid(s, &why))
    throw std::invalid_argument("block_graph_of_steiner: invalid system: " + why);
  const int b = static_cast<int>(s.blocks.size());
  SteinerBlockGraph out;
  out.symmetric_design = s.symmetric();
  out.graph = Graph(b);
  for (int i = 0; i < b; ++i) out.graph.set_label(i, block_label(s.blocks[i]));
  for (int p = 0; p < s.n; ++p) {
    std::vector<int> clique;
    for (int i = 0; i < b; ++i)
      if (std::binary_search(s.blocks[i].begin(), s.blocks[i].end(), p)) clique.push_back(i);
    for (size_t i = 0; i < clique.size(); ++i)
      for (size_t j = i + 1; j < clique.size(); ++j)
        out.graph.add_edge(clique[i], clique[j]);
    out.cliques.cliques.push_back(std::move(clique));
    out.cliques.names.push_back("p" + std::to_string(p));
  }
  return out;
}

}  // namespace tightgraphs
