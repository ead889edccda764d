#include "qpt/pipeline.h"

#include "qpt/crossing_analysis.h"
#include "qpt/error.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace qpt {

CurveCollection curve_collection(const Drawing& d) {
  const CrossingGraph g = crossing_graph(d);
  CurveCollection c{g.nodes(), g.graph(), Graph(g.size())};
  const auto& edges = d.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& a = edges[i];
      const auto& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) c.shares_endpoint.add_edge(i, j);
    }
  }
  return c;
}

namespace {

std::size_t index_of(const std::vector<std::string>& ids, const std::string& id) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw Error(ErrorCode::kUnknownId, "unknown curve '" + id + "'", {id});
  return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace

CurveCollection restrict_collection(const CurveCollection& c, const std::vector<std::string>& ids) {
  std::vector<std::size_t> idx;
  for (const auto& id : ids) idx.push_back(index_of(c.ids, id));
  return {ids, c.crosses.induced(idx), c.shares_endpoint.induced(idx)};
}

bool verify_decomposition(const CurveCollection& c, const Decomposition& d) {
  std::vector<int> part_of(c.ids.size(), -1);
  for (std::size_t p = 0; p < d.parts.size(); ++p) {
    for (const auto& id : d.parts[p]) {
      const std::size_t i = index_of(c.ids, id);
      if (part_of[i] != -1) return false;
      part_of[i] = static_cast<int>(p);
    }
  }
  for (const auto& h : d.hubs) index_of(c.ids, h);
  if (d.hubs.size() != d.parts.size()) return false;
  if (std::count(part_of.begin(), part_of.end(), -1) != 0) return false;

  for (std::size_t p = 0; p < d.parts.size(); ++p) {
    const std::size_t hub = index_of(c.ids, d.hubs[p]);
    if (part_of[hub] != static_cast<int>(p)) return false;
    for (const auto& id : d.parts[p]) {
      const std::size_t i = index_of(c.ids, id);
      if (i != hub && !c.crosses.adjacent(hub, i)) return false;
    }
  }
  for (std::size_t i = 0; i < c.ids.size(); ++i) {
    for (std::size_t j = i + 1; j < c.ids.size(); ++j) {
      if (part_of[i] == part_of[j]) continue;
      if (c.crosses.adjacent(i, j) || c.shares_endpoint.adjacent(i, j)) return false;
    }
  }
  return true;
}

Decomposition greedy_decomposable_subcollection(const CurveCollection& c) {
  const std::size_t n = c.ids.size();
  std::vector<bool> alive(n, true);
  Decomposition out;
  while (true) {
    std::optional<std::size_t> hub;
    std::size_t best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      std::size_t deg = 0;
      for (std::size_t j = 0; j < n; ++j) deg += alive[j] && c.crosses.adjacent(i, j) ? 1 : 0;
      if (!hub || deg > best || (deg == best && c.ids[i] < c.ids[*hub])) {
        hub = i;
        best = deg;
      }
    }
    if (!hub) break;
    std::vector<std::size_t> part{*hub};
    for (std::size_t j = 0; j < n; ++j) {
      if (alive[j] && c.crosses.adjacent(*hub, j)) part.push_back(j);
    }
    std::vector<bool> drop(n, false);
    for (std::size_t i : part) {
      drop[i] = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (c.crosses.adjacent(i, j) || c.shares_endpoint.adjacent(i, j)) drop[j] = true;
      }
    }
    for (std::size_t j = 0; j < n; ++j) alive[j] = alive[j] && !drop[j];

    std::vector<std::string> ids;
    for (std::size_t i : part) ids.push_back(c.ids[i]);
    std::sort(ids.begin(), ids.end());
    out.parts.push_back(std::move(ids));
    out.hubs.push_back(c.ids[*hub]);
  }
  return out;
}

namespace {

Rational position_value(const CurvePosition& pos) {
  Rational v = Rational(static_cast<long>(pos.segment)) + pos.t;
  v.canonicalize();
  return v;
}

// The edge traversed from vertex w.
PolylineCurve oriented_from(const Edge& e, const std::string& w) {
  return e.u == w ? e.curve : e.curve.reversed();
}

// Crossings of the edge, traversed from w, with e0, in order along the edge.
std::vector<CrossingRecord> crossings_from(const Edge& e, const std::string& w,
                                           const PolylineCurve& e0) {
  return curve_crossings(oriented_from(e, w), e0);
}

PolylineCurve initial_subcurve(const Edge& e, const std::string& w, const PolylineCurve& e0) {
  const auto recs = crossings_from(e, w, e0);
  if (recs.empty()) {
    throw Error(ErrorCode::kNotAllCrossing, "edge " + e.id + " does not cross e0", {e.id});
  }
  return oriented_from(e, w).prefix(recs.front().on_a);
}

bool curves_meet(const PolylineCurve& a, const PolylineCurve& b) {
  return !curve_crossings(a, b).empty();
}

std::string ceil_div_str(std::size_t a, std::size_t b) { return std::to_string((a + b - 1) / b); }

std::vector<std::string> filter_at_vertices(const Drawing& d, const PolylineCurve& e0,
                                            const std::vector<std::string>& vertices,
                                            const std::vector<std::string>& edges, int k,
                                            const Budget& budget) {
  std::set<std::string> current(edges.begin(), edges.end());
  for (const auto& v : vertices) {
    std::vector<std::string> incident;
    for (const auto& id : current) {
      const Edge& e = d.edge(id);
      if (e.u == v || e.v == v) incident.push_back(id);
    }
    if (incident.empty()) continue;
    std::vector<PolylineCurve> sub;
    std::vector<RationalPoint> dirs;
    for (const auto& id : incident) {
      sub.push_back(initial_subcurve(d.edge(id), v, e0));
      dirs.push_back(sub.back().points()[1] - sub.back().points()[0]);
    }
    const auto order = clockwise_order(dirs);
    OrderedCurveFamily family{{}, Graph(incident.size())};
    for (std::size_t i : order) family.curves.push_back(incident[i]);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        if (curves_meet(sub[order[i]], sub[order[j]])) family.crosses.add_edge(i, j);
      }
    }
    const auto keep = disjoint_representatives(family, k, budget);
    const std::set<std::string> kept(keep.begin(), keep.end());
    for (const auto& id : incident) {
      if (!kept.count(id)) current.erase(id);
    }
  }
  return {current.begin(), current.end()};
}

}  // namespace

PipelineState build_pipeline_state(const Drawing& d, const std::string& e0_id,
                                   const PipelineOptions& options) {
  if (options.k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be at least 2");
  if (!d.edge_index(e0_id)) throw Error(ErrorCode::kUnknownId, "no edge '" + e0_id + "'", {e0_id});
  const CrossingGraph g = crossing_graph(d);
  const Edge& e0 = d.edge(e0_id);
  const std::size_t e0_index = *d.edge_index(e0_id);

  PipelineState s;
  s.e0 = e0_id;
  s.p = e0.u;
  s.q = e0.v;
  s.edge_count = d.edges().size();
  s.vertex_count = d.vertices().size();

  std::vector<std::string> missing;
  for (std::size_t i = 0; i < d.edges().size(); ++i) {
    const Edge& e = d.edges()[i];
    if (i == e0_index) continue;
    const bool touches = e.u == s.p || e.u == s.q || e.v == s.p || e.v == s.q;
    if (!touches && !g.adjacent(e0_index, i)) missing.push_back(e.id);
    if (!touches) s.E0.push_back(e.id);
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kNotAllCrossing, e0_id + " misses " + missing.front(), missing);
  }

  std::vector<std::string> v0;
  for (const auto& v : d.vertices()) {
    if (v.id != s.p && v.id != s.q) v0.push_back(v.id);
  }
  std::map<std::string, std::size_t> vpos;
  for (std::size_t i = 0; i < v0.size(); ++i) vpos[v0[i]] = i;

  if (options.filter) {
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& id : s.E0) ends.emplace_back(vpos.at(d.edge(id).u), vpos.at(d.edge(id).v));
    auto cut_size = [&](const std::vector<int>& side) {
      std::size_t c = 0;
      for (auto [a, b] : ends) c += side[a] != side[b] ? 1 : 0;
      return c;
    };
    std::mt19937_64 rng(options.seed);
    std::vector<int> side(v0.size(), 0);
    constexpr int kAttempts = 64;
    bool found = false;
    for (int a = 1; a <= kAttempts && !found; ++a) {
      for (auto& x : side) x = static_cast<int>(rng() & 1);
      s.bipartition_attempts = a;
      found = 2 * cut_size(side) >= ends.size();
    }
    if (!found) {
      // Local search: a locally maximal cut holds at least half the edges.
      s.bipartition_fallback = true;
      bool improved = true;
      while (improved) {
        improved = false;
        for (std::size_t v = 0; v < side.size(); ++v) {
          const auto before = cut_size(side);
          side[v] ^= 1;
          if (cut_size(side) > before) {
            improved = true;
          } else {
            side[v] ^= 1;
          }
        }
      }
    }
    for (std::size_t i = 0; i < v0.size(); ++i) (side[i] == 0 ? s.V1 : s.V2).push_back(v0[i]);
    for (std::size_t i = 0; i < s.E0.size(); ++i) {
      if (side[ends[i].first] != side[ends[i].second]) s.E1.push_back(s.E0[i]);
    }
    std::vector<std::size_t> e1_nodes;
    for (const auto& id : s.E1) e1_nodes.push_back(*d.edge_index(id));
    const auto clique = max_clique(g.graph().induced(e1_nodes), options.budget).size();
    s.k = std::max(options.k, static_cast<int>(clique) + 1);
    s.E2 = filter_at_vertices(d, e0.curve, s.V1, s.E1, s.k, options.budget);
    s.Eprime = filter_at_vertices(d, e0.curve, s.V2, s.E2, s.k, options.budget);
  } else {
    s.k = options.k;
    s.V1 = v0;
    s.E1 = s.E0;
    s.E2 = s.E0;
    s.Eprime = s.E0;
  }

  for (const auto& id : s.Eprime) {
    const auto recs = curve_crossings(e0.curve, d.edge(id).curve);
    s.main_points.push_back({id, recs.front().point, position_value(recs.front().on_a)});
  }
  std::sort(s.main_points.begin(), s.main_points.end(),
            [](const MainPoint& a, const MainPoint& b) { return a.position < b.position; });
  for (std::size_t i = 1; i < s.main_points.size(); ++i) {
    if (s.main_points[i - 1].position == s.main_points[i].position) {
      throw Error(ErrorCode::kCoincidentCrossings, "main points coincide on e0",
                  {s.main_points[i - 1].edge, s.main_points[i].edge});
    }
  }

  for (const auto& mp : s.main_points) {
    const Edge& e = d.edge(mp.edge);
    const auto recs = curve_crossings(e0.curve, e.curve);
    const auto& rec = *std::find_if(recs.begin(), recs.end(),
                                    [&](const CrossingRecord& r) { return r.point == mp.point; });
    const RationalPoint towards_v = e.curve.local_rays(rec.on_b).second;
    const bool v_on_left = side_of(e0.curve, rec.on_a, towards_v) == Side::kLeft;
    s.labels.emplace_back(v_on_left ? e.v : e.u, v_on_left ? e.u : e.v);
    s.S1.push_back(s.labels.back().first);
    s.S2.push_back(s.labels.back().second);
  }

  const std::size_t E = s.edge_count;
  const std::size_t n = s.vertex_count;
  const std::size_t k1 = static_cast<std::size_t>(s.k - 1);
  const std::size_t sq = k1 * k1;
  const std::size_t e0n = s.E0.size(), e1n = s.E1.size(), e2n = s.E2.size(), epn = s.Eprime.size();
  s.accounting.push_back({"|E0| > |E(G)| - 2n",
                          std::to_string(e0n) + " > " + std::to_string(E) + " - " +
                              std::to_string(2 * n),
                          e0n + 2 * n > E});
  s.accounting.push_back({"|E1| >= |E0|/2", std::to_string(e1n) + " >= " + std::to_string(e0n) + "/2",
                          2 * e1n >= e0n});
  s.accounting.push_back({"|E2| >= ceil(|E1|/(k-1)^2)",
                          std::to_string(e2n) + " >= " + ceil_div_str(e1n, sq),
                          e2n * sq >= e1n});
  s.accounting.push_back({"|E'| >= ceil(|E2|/(k-1)^2)",
                          std::to_string(epn) + " >= " + ceil_div_str(e2n, sq),
                          epn * sq >= e2n});
  s.accounting.push_back({"|E(G)| < 2(k-1)^4|E'| + 2n",
                          std::to_string(E) + " < " + std::to_string(2 * sq * sq * epn + 2 * n),
                          E < 2 * sq * sq * epn + 2 * n});
  return s;
}

Check regular_length_check(const PipelineState& s, int l) {
  if (l < 1) throw Error(ErrorCode::kInvalidArgument, "l must be at least 1");
  const auto r1 = greedy_regular_subsequence(s.S1, 2 * l).size();
  const auto r2 = greedy_regular_subsequence(s.S2, 2 * l).size();
  const std::size_t n = s.Eprime.size();
  const std::size_t d = 8 * static_cast<std::size_t>(l);
  const std::size_t need = (n + d - 1) / d;
  std::ostringstream detail;
  detail << "|R(S1," << 2 * l << ")|=" << r1 << " |R(S2," << 2 * l << ")|=" << r2
         << " need " << need;
  return {"regular length l=" + std::to_string(l), detail.str(), std::max(r1, r2) >= need};
}

Check prefix_regular_check(const PipelineState& s, int l) {
  if (l < 1) throw Error(ErrorCode::kInvalidArgument, "l must be at least 1");
  const auto r1 = greedy_regular_subsequence(s.S1, 2 * l);
  const auto r2 = greedy_regular_subsequence(s.S2, 2 * l);
  std::size_t a = 0, b = 0;
  Check c{"prefix bound l=" + std::to_string(l), "all prefixes", true};
  for (std::size_t j = 1; j <= s.S1.size(); ++j) {
    while (a < r1.size() && r1[a] < j) ++a;
    while (b < r2.size() && r2[b] < j) ++b;
    if (4 * static_cast<std::size_t>(l) * (a + b) < j) {
      c.holds = false;
      c.detail = "fails at j=" + std::to_string(j);
      break;
    }
  }
  return c;
}

Check window_support_check(const PipelineState& s) {
  const std::size_t n = s.S1.size();
  Check c{"window support", "all windows", true};
  for (std::size_t j1 = 0; j1 < n && c.holds; ++j1) {
    std::set<std::string> i1, i2;
    for (std::size_t j2 = j1; j2 < n; ++j2) {
      i1.insert(s.S1[j2]);
      i2.insert(s.S2[j2]);
      const std::size_t sum = i1.size() + i2.size();
      if (sum * sum < 4 * (j2 - j1 + 1)) {
        c.holds = false;
        c.detail = "fails on [" + std::to_string(j1 + 1) + "," + std::to_string(j2 + 1) + "]";
        break;
      }
    }
  }
  return c;
}

Check shared_endpoint_check(const Drawing& d, const PipelineState& s) {
  const PolylineCurve& e0 = d.edge(s.e0).curve;
  Check c{"shared-endpoint subcurves disjoint", "all pairs", true};
  std::map<std::string, std::vector<std::string>> at;
  for (const auto& id : s.Eprime) {
    at[d.edge(id).u].push_back(id);
    at[d.edge(id).v].push_back(id);
  }
  for (const auto& [v, ids] : at) {
    std::vector<PolylineCurve> sub;
    for (const auto& id : ids) sub.push_back(initial_subcurve(d.edge(id), v, e0));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        if (curves_meet(sub[i], sub[j])) {
          c.holds = false;
          c.detail = ids[i] + " and " + ids[j] + " at " + v;
          return c;
        }
      }
    }
  }
  return c;
}

GroundedFanSystem fans_from_witness(const Drawing& d, const PipelineState& s, bool first,
                                    const UpWitness& w, int l, int m) {
  const auto& seq = first ? s.S1 : s.S2;
  const Edge& e0 = d.edge(s.e0);
  GroundedFanSystem sys;
  std::vector<Rational> all_hits;
  for (int i = 0; i < l; ++i) {
    Fan fan;
    fan.apex = seq[w.indices[static_cast<std::size_t>(i)]];
    for (int j = 0; j < m; ++j) {
      const std::size_t at = w.indices[static_cast<std::size_t>(j * l + i)];
      const MainPoint& mp = s.main_points[at];
      const Edge& e = d.edge(mp.edge);
      const PolylineCurve curve = oriented_from(e, fan.apex);
      FanCurve fc{e.id, {}};
      for (const auto& rec : curve_crossings(curve, e0.curve)) {
        const RationalPoint to_q = e0.curve.local_rays(rec.on_b).second;
        fc.hits.push_back({position_value(rec.on_b), side_of(curve, rec.on_a, to_q)});
        all_hits.push_back(fc.hits.back().position);
        if (rec.point == mp.point) break;
      }
      fan.curves.push_back(std::move(fc));
    }
    sys.fans.push_back(std::move(fan));
  }
  std::sort(all_hits.begin(), all_hits.end());

  sys.ground.cuts.emplace_back(0);
  for (int j = 1; j < m; ++j) {
    const Rational& hi = s.main_points[w.indices[static_cast<std::size_t>(j * l)]].position;
    auto it = std::lower_bound(all_hits.begin(), all_hits.end(), hi);
    const Rational& lo = *std::prev(it);
    Rational cut = (lo + hi) / 2;
    cut.canonicalize();
    sys.ground.cuts.push_back(cut);
  }
  sys.ground.cuts.emplace_back(static_cast<long>(e0.curve.segment_count()));
  return sys;
}

namespace {

WitnessProbe probe(const Drawing& d, const CrossingGraph& g, const PipelineState& s, bool first,
                   UpWitness w, int l, int m, int k, const Budget& budget) {
  WitnessProbe p;
  std::vector<std::size_t> nodes;
  for (std::size_t i : w.indices) {
    p.edges.push_back(s.main_points[i].edge);
    nodes.push_back(*d.edge_index(s.main_points[i].edge));
  }
  p.max_crossing_set = max_clique(g.graph().induced(nodes), budget).size();
  p.k_crossing = static_cast<int>(p.max_crossing_set) >= k;
  const GroundedFanSystem sys = fans_from_witness(d, s, first, w, l, m);
  p.grounded = is_grounded(sys);
  if (p.grounded && l % 2 == 0) {
    std::size_t t = 1;
    for (const auto& f : sys.fans) {
      for (const auto& c : f.curves) t = std::max(t, c.hits.size());
    }
    try {
      p.use_size = extract_use(sys.fans, sys.ground, static_cast<int>(t)).indices.size();
    } catch (const Error& e) {
      p.note = e.what();
    }
  }
  p.witness = std::move(w);
  return p;
}

}  // namespace

KeySearch lemma_key_search(const Drawing& d, const PipelineState& s, int l, int m, int k,
                           const Budget& budget) {
  const CrossingGraph g = crossing_graph(d);
  KeySearch out;
  if (auto w = contains_up_type(s.S1, l, m)) out.s1 = probe(d, g, s, true, *w, l, m, k, budget);
  if (auto w = contains_up_type(s.S2, l, m)) out.s2 = probe(d, g, s, false, *w, l, m, k, budget);
  return out;
}

PipelineReport run_pipeline(const Drawing& d, const std::string& e0, const PipelineOptions& options,
                            int l, int m) {
  PipelineReport r;
  r.k = options.k;
  r.l = l;
  r.m = m;
  r.state = build_pipeline_state(d, e0, options);
  r.checks = r.state.accounting;
  r.checks.push_back(regular_length_check(r.state, l));
  r.checks.push_back(prefix_regular_check(r.state, l));
  r.checks.push_back(window_support_check(r.state));
  r.checks.push_back(shared_endpoint_check(d, r.state));
  r.key = lemma_key_search(d, r.state, l, m, options.k, options.budget);
  return r;
}

namespace {

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::string indices_1based(const std::vector<std::size_t>& v) {
  std::vector<std::string> s;
  for (auto i : v) s.push_back(std::to_string(i + 1));
  return join(s);
}

}  // namespace

std::string format_report_text(const PipelineReport& r) {
  const auto& s = r.state;
  std::ostringstream o;
  o << "e0: " << s.e0 << " (p=" << s.p << ", q=" << s.q << ")\n";
  o << "n=" << s.vertex_count << " |E(G)|=" << s.edge_count << "\n";
  o << "|E0|=" << s.E0.size() << " |E1|=" << s.E1.size() << " |E2|=" << s.E2.size()
    << " |E'|=" << s.Eprime.size() << "\n";
  o << "V1: " << join(s.V1) << "\n";
  o << "V2: " << join(s.V2) << "\n";
  o << "bipartition attempts: " << s.bipartition_attempts
    << (s.bipartition_fallback ? " (local search)" : "") << "\n";
  if (s.k != r.k) o << "fan filtering k raised to " << s.k << "\n";
  o << "main points:\n";
  for (std::size_t i = 0; i < s.main_points.size(); ++i) {
    const auto& mp = s.main_points[i];
    o << "  " << i + 1 << " " << mp.edge << " at " << mp.point << " p_i=" << s.labels[i].first
      << " q_i=" << s.labels[i].second << "\n";
  }
  o << "S1: " << join(s.S1) << "\n";
  o << "S2: " << join(s.S2) << "\n";
  for (const auto& c : r.checks) {
    o << (c.holds ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  auto key = [&](const char* name, const std::optional<WitnessProbe>& p) {
    o << "up(" << r.l << "," << r.m << ") in " << name << ": ";
    if (!p) {
      o << "none\n";
      return;
    }
    o << "positions " << indices_1based(p->witness.indices) << "; edges " << join(p->edges)
      << "; max crossing set " << p->max_crossing_set << (p->k_crossing ? " (k reached)" : "")
      << "; fans " << (p->grounded ? "grounded" : "not grounded");
    if (p->use_size) o << "; combined extraction size " << *p->use_size;
    if (!p->note.empty()) o << "; " << p->note;
    o << "\n";
  };
  key("S1", r.key.s1);
  key("S2", r.key.s2);
  return o.str();
}

std::string format_report_csv(const PipelineReport& r) {
  const auto& s = r.state;
  std::ostringstream o;
  o << "# qpt-pipeline v1\n";
  o << "section,key,value\n";
  o << "input,e0," << s.e0 << "\n";
  o << "input,n," << s.vertex_count << "\n";
  o << "input,edges," << s.edge_count << "\n";
  o << "sizes,E0," << s.E0.size() << "\n";
  o << "sizes,E1," << s.E1.size() << "\n";
  o << "sizes,E2," << s.E2.size() << "\n";
  o << "sizes,Eprime," << s.Eprime.size() << "\n";
  o << "sequence,S1," << join(s.S1) << "\n";
  o << "sequence,S2," << join(s.S2) << "\n";
  for (const auto& c : r.checks) {
    o << "check," << c.name << "," << (c.holds ? "PASS" : "FAIL") << "\n";
  }
  auto key = [&](const char* name, const std::optional<WitnessProbe>& p) {
    o << "up," << name << "," << (p ? indices_1based(p->witness.indices) : "none") << "\n";
  };
  key("S1", r.key.s1);
  key("S2", r.key.s2);
  return o.str();
}

}  // namespace qpt
