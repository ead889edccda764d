#include "qpt/graph.h"

namespace qpt {

std::size_t Graph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (char c : adj_[u]) d += c != 0;
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t u = 0; u < size(); ++u) twice += degree(u);
  return twice / 2;
}

std::vector<std::size_t> Graph::neighbors(std::size_t u) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (adj_[u][v]) out.push_back(v);
  }
  return out;
}

Graph Graph::induced(std::span<const std::size_t> nodes) const {
  Graph g(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (adjacent(nodes[i], nodes[j])) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace qpt
