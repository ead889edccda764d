#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qpt {

/// Small undirected simple graph on nodes 0..n-1 backed by an adjacency
/// matrix. Exact searches in this library are exponential, so graphs stay
/// at desk scale and the matrix costs nothing.
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : adj_(n, std::vector<char>(n, 0)) {}

  std::size_t size() const noexcept { return adj_.size(); }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    adj_[u][v] = 1;
    adj_[v][u] = 1;
  }

  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u][v] != 0; }

  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const;
  std::vector<std::size_t> neighbors(std::size_t u) const;

  /// Subgraph induced on `nodes`; node i of the result is nodes[i].
  Graph induced(std::span<const std::size_t> nodes) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<char>> adj_;
};

}  // namespace qpt
