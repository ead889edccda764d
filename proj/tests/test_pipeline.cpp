#include "oracles.h"
#include "support.h"

#include "qpt/error.h"
#include "qpt/generators.h"
#include "qpt/pipeline.h"

#include <doctest.h>

#include <set>

using namespace qpt;
using testsupport::fixture;

namespace {

PipelineOptions opts(bool filter = true, std::uint64_t seed = 1) {
  PipelineOptions o;
  o.filter = filter;
  o.seed = seed;
  return o;
}

SymbolSequence seq(std::initializer_list<const char*> s) { return {s.begin(), s.end()}; }

Drawing stars(int count) {
  std::string text;
  for (int s = 0; s < count; ++s) {
    const std::string y = std::to_string(10 * s);
    const std::string y1 = std::to_string(10 * s + 1);
    const std::string y2 = std::to_string(10 * s - 1);
    const std::string tag = std::to_string(s);
    text += "vertex h" + tag + "a 0 " + y + "\nvertex h" + tag + "b 12 " + y + "\n";
    text += "edge h" + tag + " h" + tag + "a h" + tag + "b\n";
    for (int i = 1; i <= 5; ++i) {
      const std::string id = tag + "_" + std::to_string(i);
      const std::string x = std::to_string(2 * i);
      text += "vertex t" + id + " " + x + " " + y1 + "\nvertex b" + id + " " + x + " " + y2 + "\n";
      text += "edge s" + id + " t" + id + " b" + id + "\n";
    }
  }
  return parse_drawing(text);
}

bool has_check(const std::vector<Check>& checks, const std::string& prefix) {
  for (const auto& c : checks) {
    if (c.name.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("decomposition verification") {
  const Drawing three = parse_drawing(
      "vertex a 0 0\nvertex b 2 2\nvertex c 0 2\nvertex d 2 0\nvertex e 5 0\nvertex f 6 0\n"
      "edge e1 a b\nedge e2 c d\nedge e3 e f\n");
  const auto c = curve_collection(three);
  CHECK(verify_decomposition(c, {{{"e1", "e2"}}, {"e1"}}) == false);
  CHECK(verify_decomposition(c, {{{"e1", "e2"}, {"e3"}}, {"e1", "e3"}}));
  CHECK(verify_decomposition(restrict_collection(c, {"e1", "e2"}), {{{"e1", "e2"}}, {"e2"}}));
  CHECK_FALSE(verify_decomposition(c, {{{"e1"}, {"e2"}, {"e3"}}, {"e1", "e2", "e3"}}));
  CHECK_THROWS_AS(verify_decomposition(c, {{{"e1", "zz"}}, {"e1"}}), Error);
}

TEST_CASE("greedy decomposable subcollection") {
  const Drawing apart = parse_drawing(
      "vertex a 0 0\nvertex b 1 0\nvertex c 0 1\nvertex d 1 1\nvertex e 0 2\nvertex f 1 2\n"
      "edge x a b\nedge y c d\nedge z e f\n");
  const auto singles = greedy_decomposable_subcollection(curve_collection(apart));
  CHECK(singles.parts.size() == 3);
  CHECK(verify_decomposition(curve_collection(apart), singles));

  const auto one = greedy_decomposable_subcollection(curve_collection(stars(1)));
  REQUIRE(one.parts.size() == 1);
  CHECK(one.parts[0].size() == 6);
  CHECK(one.hubs[0] == "h0");

  const auto two = greedy_decomposable_subcollection(curve_collection(stars(2)));
  CHECK(two.parts.size() == 2);
  CHECK(verify_decomposition(curve_collection(stars(2)), two));
}

TEST_CASE("greedy decomposition always verifies") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Drawing d = generate_random_drawing(8, 10, 2, seed);
    const auto c = curve_collection(d);
    const auto dec = greedy_decomposable_subcollection(c);
    std::vector<std::string> covered;
    for (const auto& p : dec.parts) covered.insert(covered.end(), p.begin(), p.end());
    CHECK(verify_decomposition(restrict_collection(c, covered), dec));
  }
}

TEST_CASE("two crossing edges give the expected sequences") {
  const auto s = build_pipeline_state(read_drawing_file(fixture("two_edges.txt")), "e0", opts(false));
  CHECK(s.S1 == seq({"v1", "v3"}));
  CHECK(s.S2 == seq({"v2", "v4"}));
  const auto f = build_pipeline_state(read_drawing_file(fixture("two_edges.txt")), "e0", opts());
  CHECK(f.S1.size() == f.Eprime.size());
}

TEST_CASE("hand-built fixture reproduces the published sequences") {
  const Drawing d = read_drawing_file(fixture("five_edges.txt"));
  const auto s = build_pipeline_state(d, "e0", opts(false));
  CHECK(s.S1 == seq({"v3", "v1", "v2", "v2", "v2"}));
  CHECK(s.S2 == seq({"v1", "v4", "v3", "v4", "v1"}));
  CHECK_FALSE(is_l_regular(s.S1, 2));

  // Edges v1v3, v2v3 and v1v2 form a triangle, so a bipartition loses one.
  const auto filtered = build_pipeline_state(d, "e0", opts(true));
  CHECK(filtered.Eprime.size() < 5);
}

TEST_CASE("single crossing edge") {
  const Drawing d = parse_drawing(
      "vertex p 0 0\nvertex q 4 0\nvertex a 1 1\nvertex b 2 -1\nedge e0 p q\nedge e1 a b\n");
  const auto s = build_pipeline_state(d, "e0", opts());
  CHECK(s.S1.size() == 1);
  CHECK(s.S2.size() == 1);
}

TEST_CASE("pipeline errors") {
  try {
    build_pipeline_state(read_drawing_file(fixture("misses_e0.txt")), "e0", opts());
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAllCrossing);
  }
  CHECK_THROWS_AS(build_pipeline_state(read_drawing_file(fixture("two_edges.txt")), "nope", opts()),
                  Error);
  CHECK_THROWS_AS(build_pipeline_state(read_drawing_file(fixture("tangency.txt")), "e", opts()),
                  Error);
}

TEST_CASE("pipeline states on random all-crossing drawings") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const int n = 5 + static_cast<int>(seed % 8);
    const int pairs = (n - 2) * (n - 3) / 2;
    const Drawing d = generate_all_crossing_drawing(n, std::min(pairs, 4 + static_cast<int>(seed % 9)), 2, seed);
    const auto s = build_pipeline_state(d, "e0", opts(true, seed));
    for (const auto& c : s.accounting) CHECK_MESSAGE(c.holds, c.name << " " << c.detail);
    CHECK(s.S1.size() == s.Eprime.size());
    CHECK(s.S2.size() == s.Eprime.size());
    CHECK(s.main_points.size() == s.Eprime.size());

    const std::set<std::string> e0(s.E0.begin(), s.E0.end()), e1(s.E1.begin(), s.E1.end()),
        e2(s.E2.begin(), s.E2.end());
    for (const auto& e : s.E1) CHECK(e0.count(e));
    for (const auto& e : s.E2) CHECK(e1.count(e));
    for (const auto& e : s.Eprime) CHECK(e2.count(e));
    const std::set<std::string> v1(s.V1.begin(), s.V1.end());
    for (const auto& e : s.E1) {
      const auto& edge = d.edge(e);
      CHECK(v1.count(edge.u) != v1.count(edge.v));
    }

    // e0 runs along the x-axis from p to q: the main point is the leftmost
    // contact, and the label is the end reached by moving upwards there.
    const auto& axis = d.edge("e0").curve.points();
    for (std::size_t i = 0; i < s.main_points.size(); ++i) {
      const auto& mp = s.main_points[i];
      if (i > 0) CHECK(s.main_points[i - 1].position < mp.position);
      const auto& pts = d.edge(mp.edge).curve.points();
      const auto contacts = oracle::polyline_contacts(pts, axis);
      REQUIRE(contacts);
      RationalPoint left = contacts->front().point;
      for (const auto& c : *contacts) {
        if (c.point.x < left.x) left = c.point;
      }
      CHECK(mp.point == left);
      for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
        if (!oracle::on_closed_segment(left, pts[j], pts[j + 1])) continue;
        const bool up = pts[j + 1].y > pts[j].y;
        const auto& edge = d.edge(mp.edge);
        CHECK(s.labels[i].first == (up ? edge.v : edge.u));
        CHECK(s.labels[i].second == (up ? edge.u : edge.v));
        CHECK(s.S1[i] == s.labels[i].first);
        CHECK(s.S2[i] == s.labels[i].second);
        break;
      }
    }

    for (int l = 1; l <= 3; ++l) {
      CHECK(regular_length_check(s, l).holds);
      CHECK(prefix_regular_check(s, l).holds);
    }
    CHECK(window_support_check(s).holds);
    CHECK(shared_endpoint_check(d, s).holds);
  }
}

TEST_CASE("pattern search agrees with the subset oracle") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Drawing d = generate_all_crossing_drawing(8, 10, 2, seed);
    const auto s = build_pipeline_state(d, "e0", opts(false, seed));
    const auto key = lemma_key_search(d, s, 2, 2, 3);
    CHECK(key.s1.has_value() == oracle::has_up(s.S1, 2, 2));
    CHECK(key.s2.has_value() == oracle::has_up(s.S2, 2, 2));
    for (const auto* probe : {&key.s1, &key.s2}) {
      if (!*probe) continue;
      const auto& p = **probe;
      CHECK(p.witness.indices.size() == 4);
      CHECK(p.k_crossing == (p.max_crossing_set >= 3));
    }
  }
  const Drawing fig = read_drawing_file(fixture("five_edges.txt"));
  const auto s = build_pipeline_state(fig, "e0", opts(false));
  const auto key = lemma_key_search(fig, s, 2, 2, 3);
  CHECK_FALSE(key.s1);
  CHECK_FALSE(key.s2);
}

TEST_CASE("fans read off a witness are grounded on e0") {
  int probed = 0;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Drawing d = generate_all_crossing_drawing(7, 10, 2, seed);
    const auto s = build_pipeline_state(d, "e0", opts(false, seed));
    const auto w = contains_up_type(s.S1, 2, 2);
    if (!w) continue;
    ++probed;
    const auto sys = fans_from_witness(d, s, true, *w, 2, 2);
    CHECK(sys.fans.size() == 2);
    CHECK(sys.ground.pieces() == 2);
    for (const auto& f : sys.fans) CHECK(f.curves.size() == 2);
  }
  CHECK(probed > 0);
}

TEST_CASE("report formats") {
  const Drawing d = read_drawing_file(fixture("five_edges.txt"));
  const auto r = run_pipeline(d, "e0", opts(false), 2, 2);
  CHECK(has_check(r.checks, "regular length"));
  CHECK(has_check(r.checks, "window support"));
  const std::string text = format_report_text(r);
  CHECK(text.find("S1: v3 v1 v2 v2 v2\n") != std::string::npos);
  CHECK(text.find("S2: v1 v4 v3 v4 v1\n") != std::string::npos);
  const std::string csv = format_report_csv(r);
  CHECK(csv.rfind("# qpt-pipeline v1\nsection,key,value\n", 0) == 0);
  CHECK(format_report_text(run_pipeline(d, "e0", opts(false), 2, 2)) == text);
}
