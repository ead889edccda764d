#pragma once

#include "qpt/geometry.h"
#include "qpt/graph.h"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qpt {

struct Vertex {
  std::string id;
  RationalPoint point;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::string id;
  std::string u;
  std::string v;
  PolylineCurve curve;  // starts at u, ends at v

  /// Interior bend points, in order from u to v.
  std::vector<RationalPoint> bends() const;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A topological graph drawn with polyline edges. Vertices and edges are
/// kept sorted by id; an edge's index is its rank in that order, and every
/// analysis in the library addresses edges by that index.
class Drawing {
 public:
  void add_vertex(std::string id, RationalPoint point);
  void add_edge(std::string id, std::string u, std::string v,
                std::vector<RationalPoint> bends = {});

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<std::size_t> vertex_index(std::string_view id) const;
  std::optional<std::size_t> edge_index(std::string_view id) const;
  const Vertex& vertex(std::string_view id) const;
  const Edge& edge(std::string_view id) const;

  friend bool operator==(const Drawing&, const Drawing&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// Reads the line format
///   vertex <id> <x> <y>
///   edge <id> <u> <v> [<x> <y> ...]
/// with '#' comments and exact integer or p/q coordinates. Vertex lines may
/// appear after the edges that use them. Only structure is checked here.
Drawing parse_drawing(std::string_view text);

/// Vertices then edges, each sorted by id, coordinates as reduced fractions.
std::string serialize_drawing(const Drawing& d);

Drawing read_drawing_file(const std::string& path);

enum class Rule {
  kLoop,
  kParallelEdge,
  kCoincidentVertices,
  kDegenerateSegment,
  kSelfIntersection,
  kPassesThroughVertex,
  kTangency,
  kOverlap,
  kCoincidentCrossings,
  kMultiplicity,
};

std::string_view to_string(Rule rule);

struct Violation {
  Rule rule;
  std::vector<std::string> ids;
  std::optional<RationalPoint> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks the drawing model: no loops or parallel edges, simple curves that
/// avoid foreign vertices, only proper crossings, and pairwise distinct
/// crossing points. With t_limit, also that no pair of edges crosses more
/// than t_limit times.
ValidationReport validate_drawing(const Drawing& d,
                                  std::optional<std::size_t> t_limit = std::nullopt);

/// Abstract graph on the edges of a drawing; two nodes are adjacent when the
/// edges' interiors share a point.
class CrossingGraph {
 public:
  CrossingGraph(std::vector<std::string> nodes,
                std::vector<std::vector<std::size_t>> multiplicity);

  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t multiplicity(std::size_t a, std::size_t b) const { return mult_[a][b]; }
  bool adjacent(std::size_t a, std::size_t b) const { return mult_[a][b] > 0; }
  const Graph& graph() const noexcept { return graph_; }

  std::size_t max_multiplicity() const;
  std::size_t crossing_pair_count() const { return graph_.edge_count(); }

 private:
  std::vector<std::string> nodes_;
  std::vector<std::vector<std::size_t>> mult_;
  Graph graph_;
};

/// Throws Error(kInvalidDrawing) when validate_drawing(d) fails.
CrossingGraph crossing_graph(const Drawing& d);

/// Every pair of edges shares at most one point, counting shared endpoints.
bool is_simple_drawing(const Drawing& d, const CrossingGraph& g);

}  // namespace qpt
