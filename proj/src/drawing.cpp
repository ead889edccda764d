#include "qpt/drawing.h"

#include "drawing_checker.h"
#include "qpt/error.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace qpt {

std::vector<RationalPoint> Edge::bends() const {
  const auto& pts = curve.points();
  return {pts.begin() + 1, pts.end() - 1};
}

namespace {

template <class T>
auto find_by_id(const std::vector<T>& items, std::string_view id) {
  return std::lower_bound(items.begin(), items.end(), id,
                          [](const T& item, std::string_view key) { return item.id < key; });
}

}  // namespace

void Drawing::add_vertex(std::string id, RationalPoint point) {
  auto it = find_by_id(vertices_, id);
  if (it != vertices_.end() && it->id == id) {
    throw Error(ErrorCode::kDuplicateId, "vertex '" + id + "' defined twice", {id});
  }
  vertices_.insert(it, Vertex{std::move(id), std::move(point)});
}

void Drawing::add_edge(std::string id, std::string u, std::string v,
                       std::vector<RationalPoint> bends) {
  auto it = find_by_id(edges_, id);
  if (it != edges_.end() && it->id == id) {
    throw Error(ErrorCode::kDuplicateId, "edge '" + id + "' defined twice", {id});
  }
  for (const std::string* end : {&u, &v}) {
    if (!vertex_index(*end)) {
      throw Error(ErrorCode::kUnknownVertex,
                  "edge '" + id + "' uses undefined vertex '" + *end + "'", {id, *end});
    }
  }
  std::vector<RationalPoint> pts;
  pts.reserve(bends.size() + 2);
  pts.push_back(vertex(u).point);
  for (auto& b : bends) pts.push_back(std::move(b));
  pts.push_back(vertex(v).point);
  edges_.insert(it, Edge{std::move(id), std::move(u), std::move(v), PolylineCurve(std::move(pts))});
}

std::optional<std::size_t> Drawing::vertex_index(std::string_view id) const {
  auto it = find_by_id(vertices_, id);
  if (it == vertices_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Drawing::edge_index(std::string_view id) const {
  auto it = find_by_id(edges_, id);
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

const Vertex& Drawing::vertex(std::string_view id) const {
  const auto i = vertex_index(id);
  if (!i) throw Error(ErrorCode::kUnknownVertex, "no vertex '" + std::string(id) + "'");
  return vertices_[*i];
}

const Edge& Drawing::edge(std::string_view id) const {
  const auto i = edge_index(id);
  if (!i) throw Error(ErrorCode::kUnknownId, "no edge '" + std::string(id) + "'");
  return edges_[*i];
}

// ---------------------------------------------------------------------------
// File format

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& reason) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + reason);
}

Rational parse_coordinate(const std::string& tok, std::size_t line) {
  Rational r;
  if (!parse_rational(tok, r)) parse_fail(line, "bad coordinate '" + tok + "'");
  return r;
}

struct PendingEdge {
  std::size_t line;
  std::string id, u, v;
  std::vector<RationalPoint> bends;
};

}  // namespace

Drawing parse_drawing(std::string_view text) {
  Drawing d;
  std::vector<PendingEdge> pending;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tok = tokenize(line);
    if (tok.empty()) continue;

    if (tok[0] == "vertex") {
      if (tok.size() != 4) parse_fail(line_no, "vertex needs <id> <x> <y>");
      try {
        d.add_vertex(tok[1], {parse_coordinate(tok[2], line_no), parse_coordinate(tok[3], line_no)});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kDuplicateId) throw;
        throw Error(ErrorCode::kDuplicateId,
                    "line " + std::to_string(line_no) + ": vertex '" + tok[1] + "' defined twice",
                    {tok[1]});
      }
    } else if (tok[0] == "edge") {
      if (tok.size() < 4) parse_fail(line_no, "edge needs <id> <u> <v> [<x> <y> ...]");
      if ((tok.size() - 4) % 2 != 0) parse_fail(line_no, "odd number of bend coordinates");
      PendingEdge e{line_no, tok[1], tok[2], tok[3], {}};
      for (std::size_t i = 4; i < tok.size(); i += 2) {
        e.bends.push_back({parse_coordinate(tok[i], line_no), parse_coordinate(tok[i + 1], line_no)});
      }
      pending.push_back(std::move(e));
    } else {
      parse_fail(line_no, "unknown record '" + tok[0] + "'");
    }
  }

  for (auto& e : pending) {
    try {
      d.add_edge(e.id, e.u, e.v, std::move(e.bends));
    } catch (const Error& err) {
      throw Error(err.code(), "line " + std::to_string(e.line) + ": " + err.what(), err.witness());
    }
  }
  return d;
}

std::string serialize_drawing(const Drawing& d) {
  std::ostringstream out;
  for (const auto& v : d.vertices()) {
    out << "vertex " << v.id << ' ' << format_rational(v.point.x) << ' '
        << format_rational(v.point.y) << '\n';
  }
  for (const auto& e : d.edges()) {
    out << "edge " << e.id << ' ' << e.u << ' ' << e.v;
    for (const auto& b : e.bends()) {
      out << ' ' << format_rational(b.x) << ' ' << format_rational(b.y);
    }
    out << '\n';
  }
  return out.str();
}

Drawing read_drawing_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_drawing(buf.str());
}

// ---------------------------------------------------------------------------
// Validation

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::kLoop: return "LOOP";
    case Rule::kParallelEdge: return "PARALLEL_EDGE";
    case Rule::kCoincidentVertices: return "COINCIDENT_VERTICES";
    case Rule::kDegenerateSegment: return "DEGENERATE_SEGMENT";
    case Rule::kSelfIntersection: return "SELF_INTERSECTION";
    case Rule::kPassesThroughVertex: return "PASSES_THROUGH_VERTEX";
    case Rule::kTangency: return "TANGENCY";
    case Rule::kOverlap: return "OVERLAP";
    case Rule::kCoincidentCrossings: return "COINCIDENT_CROSSINGS";
    case Rule::kMultiplicity: return "MULTIPLICITY";
  }
  return "UNKNOWN";
}

namespace detail {

std::vector<Violation> DrawingChecker::add_vertex(const Vertex& v) {
  std::vector<Violation> out;
  auto [it, inserted] = vertex_at_.emplace(v.point, v.id);
  if (!inserted) {
    out.push_back({Rule::kCoincidentVertices, {it->second, v.id}, v.point, ""});
  }
  return out;
}

DrawingChecker::EdgeCheck DrawingChecker::check(const Edge& e) const {
  EdgeCheck c;
  c.mult.assign(edges_.size(), 0);
  auto& out = c.violations;

  if (e.u == e.v) out.push_back({Rule::kLoop, {e.id}, e.curve.front(), ""});
  const auto key = std::minmax(e.u, e.v);
  if (auto it = endpoint_pairs_.find({key.first, key.second}); it != endpoint_pairs_.end()) {
    out.push_back({Rule::kParallelEdge, {it->second, e.id}, std::nullopt, ""});
  }

  if (!has_distinct_consecutive_points(e.curve)) {
    out.push_back({Rule::kDegenerateSegment, {e.id}, std::nullopt,
                   "consecutive polyline points coincide"});
    return c;
  }
  if (auto p = self_intersection(e.curve)) {
    out.push_back({Rule::kSelfIntersection, {e.id}, *p, ""});
    return c;
  }
  for (const auto& [point, vid] : vertex_at_) {
    if (vid == e.u || vid == e.v) continue;
    if (e.curve.locate(point)) {
      out.push_back({Rule::kPassesThroughVertex, {e.id, vid}, point, ""});
    }
  }

  std::map<RationalPoint, std::size_t> own_points;
  for (std::size_t f = 0; f < edges_.size(); ++f) {
    if (!usable_[f]) continue;
    const Edge& other = edges_[f];
    std::vector<CrossingRecord> recs;
    try {
      recs = curve_crossings(other.curve, e.curve);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kOverlapSegments) throw;
      out.push_back({Rule::kOverlap, {other.id, e.id}, std::nullopt, err.what()});
      continue;
    }
    for (const auto& r : recs) {
      if (r.kind == ContactKind::kTouch) {
        // A touch at an endpoint is a curve running through a vertex, which
        // the vertex check reports.
        if (other.curve.is_endpoint(r.on_a) || e.curve.is_endpoint(r.on_b)) continue;
        out.push_back({Rule::kTangency, {other.id, e.id}, r.point, ""});
        continue;
      }
      ++c.mult[f];
      if (auto it = crossing_points_.find(r.point); it != crossing_points_.end()) {
        out.push_back({Rule::kCoincidentCrossings,
                       {edges_[it->second.first].id, edges_[it->second.second].id, e.id},
                       r.point, ""});
      } else if (auto own = own_points.find(r.point); own != own_points.end()) {
        out.push_back({Rule::kCoincidentCrossings, {edges_[own->second].id, other.id, e.id},
                       r.point, ""});
      } else {
        own_points.emplace(r.point, f);
      }
      c.points.emplace_back(r.point, f);
    }
    if (t_limit_ && c.mult[f] > *t_limit_) {
      out.push_back({Rule::kMultiplicity, {other.id, e.id}, std::nullopt,
                     std::to_string(c.mult[f]) + " > " + std::to_string(*t_limit_)});
    }
  }
  return c;
}

void DrawingChecker::commit(const Edge& e, EdgeCheck&& c) {
  const std::size_t idx = edges_.size();
  const bool usable = is_simple(e.curve);
  const auto key = std::minmax(e.u, e.v);
  endpoint_pairs_.emplace(std::make_pair(key.first, key.second), e.id);
  for (const auto& [p, f] : c.points) crossing_points_.emplace(p, std::make_pair(f, idx));
  for (std::size_t f = 0; f < idx; ++f) mult_[f].push_back(c.mult[f]);
  c.mult.push_back(0);
  mult_.push_back(std::move(c.mult));
  edges_.push_back(e);
  usable_.push_back(usable);
}

std::vector<Violation> DrawingChecker::add_edge(const Edge& e) {
  EdgeCheck c = check(e);
  auto violations = c.violations;
  commit(e, std::move(c));
  return violations;
}

bool DrawingChecker::try_add_edge(const Edge& e) {
  EdgeCheck c = check(e);
  if (!c.violations.empty()) return false;
  commit(e, std::move(c));
  return true;
}

}  // namespace detail

ValidationReport validate_drawing(const Drawing& d, std::optional<std::size_t> t_limit) {
  detail::DrawingChecker checker(t_limit);
  ValidationReport report;
  auto append = [&](std::vector<Violation>&& vs) {
    for (auto& v : vs) report.violations.push_back(std::move(v));
  };
  for (const auto& v : d.vertices()) append(checker.add_vertex(v));
  for (const auto& e : d.edges()) append(checker.add_edge(e));
  return report;
}

// ---------------------------------------------------------------------------
// Crossing graph

CrossingGraph::CrossingGraph(std::vector<std::string> nodes,
                             std::vector<std::vector<std::size_t>> multiplicity)
    : nodes_(std::move(nodes)), mult_(std::move(multiplicity)), graph_(nodes_.size()) {
  for (std::size_t a = 0; a < nodes_.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes_.size(); ++b) {
      if (mult_[a][b] > 0) graph_.add_edge(a, b);
    }
  }
}

std::size_t CrossingGraph::max_multiplicity() const {
  std::size_t best = 0;
  for (const auto& row : mult_) {
    for (std::size_t m : row) best = std::max(best, m);
  }
  return best;
}

CrossingGraph crossing_graph(const Drawing& d) {
  detail::DrawingChecker checker;
  std::size_t violations = 0;
  for (const auto& v : d.vertices()) violations += checker.add_vertex(v).size();
  for (const auto& e : d.edges()) violations += checker.add_edge(e).size();
  if (violations > 0) {
    throw Error(ErrorCode::kInvalidDrawing,
                std::to_string(violations) + " drawing-model violation(s); run validate");
  }
  std::vector<std::string> ids;
  ids.reserve(d.edges().size());
  for (const auto& e : d.edges()) ids.push_back(e.id);
  return CrossingGraph(std::move(ids), checker.multiplicity());
}

bool is_simple_drawing(const Drawing& d, const CrossingGraph& g) {
  const auto& edges = d.edges();
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const std::set<std::string> ends{edges[a].u, edges[a].v};
      const std::size_t shared = ends.count(edges[b].u) + ends.count(edges[b].v);
      if (g.multiplicity(a, b) + shared > 1) return false;
    }
  }
  return true;
}

}  // namespace qpt
