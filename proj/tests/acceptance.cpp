// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include "families.h"
#include "oracles.h"

#include "qpt/bounds.h"
#include "qpt/crossing_analysis.h"
#include "qpt/drawing.h"
#include "qpt/error.h"
#include "qpt/fans.h"
#include "qpt/generators.h"
#include "qpt/pipeline.h"
#include "qpt/sequences.h"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace qpt;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) {
    o.pass = false;
    o.detail += " (over time limit)";
  }
  if (!o.pass) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << o.detail << " ("
            << timing << ")" << std::endl;
}

std::string run_cli(const std::string& args) {
  FILE* pipe = popen((std::string(QPT_BINARY) + " " + args + " 2>&1").c_str(), "r");
  if (!pipe) return "";
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

std::vector<RationalPoint> random_polyline(std::mt19937_64& rng) {
  while (true) {
    const auto bends = uniform_int(rng, 0, 4);
    std::vector<RationalPoint> pts;
    for (int i = 0; i < bends + 2; ++i) {
      pts.push_back({Rational(uniform_int(rng, 0, 20)), Rational(uniform_int(rng, 0, 20))});
    }
    if (oracle::simple_polyline(pts)) return pts;
  }
}

Outcome geometry_oracle() {
  std::mt19937_64 rng(1);
  int agree = 0, overlap = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto pa = random_polyline(rng);
    const auto pb = random_polyline(rng);
    const auto expected = oracle::polyline_contacts(pa, pb);
    std::vector<CrossingRecord> got;
    bool threw = false;
    try {
      got = curve_crossings(PolylineCurve(pa), PolylineCurve(pb));
    } catch (const Error& e) {
      threw = e.code() == ErrorCode::kOverlapSegments;
    }
    if (!expected) {
      if (threw) {
        ++agree;
        ++overlap;
      }
      continue;
    }
    if (threw || got.size() != expected->size()) continue;
    std::sort(got.begin(), got.end(), [](const CrossingRecord& x, const CrossingRecord& y) {
      return oracle::point_less(x.point, y.point);
    });
    bool same = true;
    for (std::size_t i = 0; i < got.size(); ++i) {
      same = same && got[i].point == (*expected)[i].point &&
             (got[i].kind == ContactKind::kProperCross) == (*expected)[i].proper;
    }
    agree += same ? 1 : 0;
  }
  return {agree == 1000, std::to_string(agree) + "/1000 pairs agree (" + std::to_string(overlap) +
                             " overlapping)"};
}

Outcome up_detector() {
  long total = 0, disagree = 0;
  for (std::size_t len = 0; len <= 10; ++len) {
    std::vector<int> digit(len, 0);
    while (true) {
      SymbolSequence s;
      for (int d : digit) s.push_back(std::string(1, static_cast<char>('a' + d)));
      for (int l = 2; l <= 3; ++l) {
        for (int m = 2; m <= 3; ++m) {
          ++total;
          const auto w = contains_up_type(s, l, m);
          const bool truth = oracle::has_up(s, l, m);
          if (w.has_value() != truth || (w && !oracle::selection_is_up(s, w->indices, l, m))) {
            ++disagree;
          }
        }
      }
      std::size_t i = 0;
      while (i < len && ++digit[i] == 3) digit[i++] = 0;
      if (i == len) break;
    }
  }
  return {disagree == 0, std::to_string(total) + " checks, " + std::to_string(disagree) +
                             " disagreements"};
}

Outcome regular_length() {
  int cases = 0, holds = 0;
  std::uint64_t seed = 0;
  while (cases < 200 && seed < 5000) {
    ++seed;
    const int n = 6 + static_cast<int>(seed % 7);
    const int pairs = (n - 2) * (n - 3) / 2;
    const Drawing d =
        generate_all_crossing_drawing(n, std::min(pairs, 6 + static_cast<int>(seed % 10)), 2, seed);
    PipelineOptions o;
    o.seed = seed;
    const auto s = build_pipeline_state(d, "e0", o);
    if (s.Eprime.size() < 4) continue;
    ++cases;
    bool ok = true;
    for (int l = 1; l <= 3; ++l) {
      const auto r1 = greedy_regular_subsequence(s.S1, 2 * l).size();
      const auto r2 = greedy_regular_subsequence(s.S2, 2 * l).size();
      const std::size_t need = (s.Eprime.size() + 8 * l - 1) / (8 * l);
      ok = ok && std::max(r1, r2) >= need && regular_length_check(s, l).holds;
    }
    holds += ok ? 1 : 0;
  }
  return {cases == 200 && holds == 200,
          std::to_string(holds) + "/" + std::to_string(cases) + " drawings"};
}

Outcome disjoint_reps() {
  int families = 0, good = 0;
  for (std::uint64_t seed = 1; families < 500 && seed < 20000; ++seed) {
    const int k = 2 + static_cast<int>(seed % 3);
    const int m = 2 + static_cast<int>(seed % 11);
    const auto f = testsupport::two_boundary_family(m, k == 2 ? 0 : 2, seed);
    if (oracle::max_clique(f.crosses).size() >= static_cast<std::size_t>(k)) continue;
    ++families;
    const auto out = disjoint_representatives(f, k);
    std::vector<std::size_t> idx;
    for (const auto& id : out) {
      idx.push_back(std::find(f.curves.begin(), f.curves.end(), id) - f.curves.begin());
    }
    bool disjoint = true;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        disjoint = disjoint && idx[i] != idx[j] && !f.crosses.adjacent(idx[i], idx[j]);
      }
    }
    const std::size_t need = (m + (k - 1) * (k - 1) - 1) / ((k - 1) * (k - 1));
    const std::size_t best = oracle::max_clique(oracle::complement(f.crosses)).size();
    if (disjoint && out.size() >= need && out.size() <= best) ++good;
  }
  return {families == 500 && good == 500,
          std::to_string(good) + "/" + std::to_string(families) + " families"};
}

Outcome convex_cliques() {
  std::string detail;
  bool ok = true;
  for (int n = 4; n <= 10; ++n) {
    const CrossingGraph g = crossing_graph(generate_convex_complete(n));
    const auto got = max_clique(g.graph());
    const auto brute = oracle::max_clique(g.graph());
    ok = ok && got.size() == static_cast<std::size_t>(n / 2) && got == brute;
    detail += (n > 4 ? " " : "") + std::to_string(n) + ":" + std::to_string(got.size());
  }
  return {ok, "sizes " + detail};
}

Outcome five_edge_regression() {
  const std::string path = std::string(QPT_FIXTURE_DIR) + "/five_edges.txt";
  const auto s = build_pipeline_state(read_drawing_file(path), "e0", [] {
    PipelineOptions o;
    o.filter = false;
    return o;
  }());
  const SymbolSequence s1 = {"v3", "v1", "v2", "v2", "v2"};
  const SymbolSequence s2 = {"v1", "v4", "v3", "v4", "v1"};
  const std::string args = "pipeline " + path + " --no-filter --l 2 --m 2";
  const std::string a = run_cli(args), b = run_cli(args);
  std::ifstream golden_file(std::string(QPT_FIXTURE_DIR) + "/five_edges.expected");
  std::stringstream golden;
  golden << golden_file.rdbuf();
  const bool seq_ok = s.S1 == s1 && s.S2 == s2;
  const bool stable = !a.empty() && a == b && a == golden.str();
  return {seq_ok && stable, std::string("sequences ") + (seq_ok ? "match" : "differ") +
                                ", CLI output " + (stable ? "byte-stable" : "unstable")};
}

Outcome fan_postconditions() {
  std::mt19937_64 rng(300);
  int good = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int t = 1 + trial % 2;
    const std::size_t m = 1 + rng() % 81;
    const int l = 1 + static_cast<int>(rng() % 2);
    const auto g = oracle::unit_ground(m);
    std::vector<Fan> fans;
    for (int i = 0; i < 2 * l; ++i) {
      fans.push_back(oracle::random_grounded_fan(m, t, rng, "f" + std::to_string(i) + "_"));
    }
    bool ok = true;
    auto sized = [&](const auto& ext, std::uint64_t formula) {
      return ext.indices.size() == formula && ext.size_degenerate == (formula == 0);
    };

    const auto two = extract_twostep(fans[0], g, t);
    ok = ok && sized(two, twostep_size(m, t));
    if (!two.indices.empty()) {
      ok = ok && is_grounded(restrict_fan(fans[0], two.indices), two.ground) &&
           satisfies_twostep(fans[0], g, two) && refines_ground(g, two);
    }

    const auto wg = extract_well_grounded_fan(fans[0], g, t);
    ok = ok && sized(wg, well_grounded_size(m, t));
    if (!wg.indices.empty()) {
      ok = ok && is_well_grounded(restrict_fan(fans[0], wg.indices), wg.ground) &&
           refines_ground(g, wg);
    }

    const std::vector<Fan> first(fans.begin(), fans.begin() + l);
    const auto sim = extract_simultaneous(first, g, t);
    ok = ok && sized(sim, simultaneous_size(m, t, l));
    for (const auto& f : first) {
      if (!sim.indices.empty()) ok = ok && is_well_grounded(restrict_fan(f, sim.indices), sim.ground);
    }

    const auto use = extract_use(fans, g, t);
    ok = ok && sized(use, use_size(m, t, l));
    if (!use.indices.empty()) {
      ok = ok && use.fan_indices.size() == static_cast<std::size_t>(l);
      for (auto fi : use.fan_indices) {
        const Fan sub = restrict_fan(fans[fi], use.indices);
        ok = ok && is_well_grounded(sub, use.ground) && is_one_sided(sub, use.ground);
        for (auto side : classify_sided(sub, use.ground)) ok = ok && side == use.side;
      }
    }
    good += ok ? 1 : 0;
  }
  return {good == 300, std::to_string(good) + "/300 systems"};
}

Outcome splitting() {
  std::mt19937_64 rng(8);
  int good = 0, witnessed = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const Graph g = oracle::random_graph(n, 0.3 + 0.5 * static_cast<double>(rng() % 10) / 10.0, rng);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const int c = 1 + static_cast<int>(rng() % 2);
    const auto r = mcguinness_split(g, order, c);
    bool ok = r.coloring.has_value() != r.witness.has_value();
    if (r.coloring) {
      ok = ok && oracle::proper_coloring(g, *r.coloring);
      for (int col : *r.coloring) ok = ok && col >= 1 && col <= 2 * c;
    } else if (r.witness) {
      ++witnessed;
      const int chi = oracle::chromatic_number(g.induced(r.witness->interval));
      ok = ok && g.adjacent(r.witness->u, r.witness->v) && chi >= c &&
           chi == r.witness->interval_chi;
    }
    if (oracle::chromatic_number(g) > 2 * c) ok = ok && r.witness.has_value();
    good += ok ? 1 : 0;
  }
  return {good == 300,
          std::to_string(good) + "/300 instances (" + std::to_string(witnessed) + " witnesses)"};
}

Outcome ackermann_table() {
  const std::vector<unsigned long> ns = {1, 2, 3, 4, 5, 16, 17, 1000000};
  const std::vector<unsigned long> want = {1, 1, 2, 2, 3, 3, 4, 4};
  bool ok = true;
  std::string got;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const auto a = inverse_ackermann(BigInt(ns[i]));
    ok = ok && a == want[i];
    got += (i ? "," : "") + std::to_string(a);
  }
  for (unsigned long n = 1; n <= 20; ++n) {
    const auto v = ackermann(2, BigInt(n), pow2(64));
    ok = ok && v && *v == pow2(n);
  }
  return {ok, "alpha = {" + got + "}, A_2(n) = 2^n for n <= 20"};
}

Outcome planar_tripwire() {
  std::vector<Drawing> corpus;
  for (int n = 3; n <= 12; ++n) corpus.push_back(generate_convex_complete(n));
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    corpus.push_back(
        generate_random_drawing(n, std::min(n * (n - 1) / 2, 2 + static_cast<int>(seed % 9)), 1, seed));
    corpus.push_back(generate_all_crossing_drawing(6 + static_cast<int>(seed % 5), 6, 2, seed));
    corpus.push_back(generate_two_boundary_fan(2 + static_cast<int>(seed % 8), 2, seed));
  }
  for (const char* f : {"five_edges.txt", "two_edges.txt", "planar.txt", "double_cross.txt"}) {
    corpus.push_back(read_drawing_file(std::string(QPT_FIXTURE_DIR) + "/" + f));
  }
  int crossing_free = 0, validated = 0;
  bool ok = true;
  for (const auto& d : corpus) {
    if (!validate_drawing(d).ok()) continue;
    ++validated;
    const CrossingGraph g = crossing_graph(d);
    const auto n = d.vertices().size();
    const BigInt m(d.edges().size());
    if (g.crossing_pair_count() == 0) {
      ++crossing_free;
      ok = ok && m <= planar_bound(n);
    }
    if (n >= 2) {
      BoundProfile p;
      p.n = n;
      ok = ok && m <= theorem1_bound(p);
    }
  }
  return {ok && crossing_free > 0, std::to_string(validated) + " validated drawings, " +
                                       std::to_string(crossing_free) + " crossing-free"};
}

}  // namespace

int main() {
  criterion(1, "crossing detection matches the segment-pair oracle", 10, geometry_oracle);
  criterion(2, "up(l,m) detector matches exhaustive subsequence search", 120, up_detector);
  criterion(3, "regular subsequence length on all-crossing drawings", 60, regular_length);
  criterion(4, "disjoint representatives on two-boundary families", 60, disjoint_reps);
  criterion(5, "convex K_n maximum crossing sets", 30, convex_cliques);
  criterion(6, "hand-built S1/S2 regression", 0, five_edge_regression);
  criterion(7, "fan extraction postconditions", 120, fan_postconditions);
  criterion(8, "interval splitting dichotomy", 60, splitting);
  criterion(9, "Ackermann table", 5, ackermann_table);
  criterion(10, "planar and edge-bound tripwires", 30, planar_tripwire);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
