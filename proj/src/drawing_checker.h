#pragma once

#include "qpt/drawing.h"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qpt::detail {

/// Incremental form of validate_drawing. Vertices must all be added before
/// edges; each edge is checked against the vertices and the edges already
/// committed. Generators use try_add_edge to reject bad candidates cheaply.
class DrawingChecker {
 public:
  explicit DrawingChecker(std::optional<std::size_t> t_limit = std::nullopt)
      : t_limit_(t_limit) {}

  std::vector<Violation> add_vertex(const Vertex& v);

  /// Checks e and commits it regardless of the outcome.
  std::vector<Violation> add_edge(const Edge& e);

  /// Commits e only if it introduces no violation.
  bool try_add_edge(const Edge& e);

  const std::vector<std::vector<std::size_t>>& multiplicity() const noexcept {
    return mult_;
  }

 private:
  struct EdgeCheck {
    std::vector<Violation> violations;
    std::vector<std::size_t> mult;  // against each committed edge
    std::vector<std::pair<RationalPoint, std::size_t>> points;  // crossing, other edge
  };

  EdgeCheck check(const Edge& e) const;
  void commit(const Edge& e, EdgeCheck&& c);

  std::optional<std::size_t> t_limit_;
  std::map<RationalPoint, std::string> vertex_at_;
  std::vector<Edge> edges_;
  std::vector<bool> usable_;  // curve simple, so pairwise checks are defined
  std::map<std::pair<std::string, std::string>, std::string> endpoint_pairs_;
  std::map<RationalPoint, std::pair<std::size_t, std::size_t>> crossing_points_;
  std::vector<std::vector<std::size_t>> mult_;
};

}  // namespace qpt::detail
