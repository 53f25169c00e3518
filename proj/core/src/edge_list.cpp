#include "tightgraphs/edge_list.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tightgraphs {

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": " + msg);
  };

  long long n = -1, m = -1;
  Graph g;
  long long edges_seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      std::string tok;
      if (!(ls >> tok)) continue;  // blank/comment before header
      if (tok != "p") fail("expected header 'p <n> <m>'");
      if (!(ls >> n >> m) || n < 0 || m < 0) fail("bad header counts");
      if (n > 5000000) fail("vertex count too large");
      std::string extra;
      if (ls >> extra) fail("trailing tokens after header");
      g = Graph(static_cast<int>(n));
      continue;
    }
    long long u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v)) fail("expected two endpoints");
    std::string extra;
    if (ls >> extra) fail("trailing tokens after edge");
    if (u < 0 || v < 0 || u >= n || v >= n) fail("endpoint out of range");
    if (u == v) fail("self loop");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) fail("duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++edges_seen;
  }
  if (n < 0) throw std::invalid_argument("edge list: missing 'p <n> <m>' header");
  if (edges_seen != m)
    throw std::invalid_argument("edge list: header promises " + std::to_string(m) +
                                " edges, found " + std::to_string(edges_seen));
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  write_edge_list(out, g);
}

}  // namespace tightgraphs
