#pragma once

#include "qpt/budget.h"
#include "qpt/drawing.h"
#include "qpt/fans.h"
#include "qpt/graph.h"
#include "qpt/sequences.h"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qpt {

/// Curves with their crossing and shared-endpoint relations, indexed by
/// position in `ids`.
struct CurveCollection {
  std::vector<std::string> ids;
  Graph crosses;
  Graph shares_endpoint;
};

CurveCollection curve_collection(const Drawing& d);

/// Sub-collection on the given ids (Error(kUnknownId) for a foreign id).
CurveCollection restrict_collection(const CurveCollection& c, const std::vector<std::string>& ids);

struct Decomposition {
  std::vector<std::vector<std::string>> parts;
  std::vector<std::string> hubs;  // hubs[i] belongs to parts[i]
};

/// Parts partition the collection, each hub crosses every other member of
/// its part, and curves in different parts neither cross nor share an
/// endpoint. Error(kUnknownId) when the decomposition names a foreign id.
bool verify_decomposition(const CurveCollection& c, const Decomposition& d);

/// Heuristic: take the curve of largest crossing degree (smallest id on
/// ties) with its crossing neighbours as a part, drop everything that
/// crosses or touches the part, repeat. The result decomposes the curves it
/// covers.
Decomposition greedy_decomposable_subcollection(const CurveCollection& c);

struct MainPoint {
  std::string edge;
  RationalPoint point;
  Rational position;  // along e0 from p: segment index + parameter
};

struct Check {
  std::string name;
  std::string detail;
  bool holds = false;
};

struct PipelineOptions {
  int k = 3;
  std::uint64_t seed = 1;
  bool filter = true;  // false keeps E' = E0 (no bipartition or fan filtering)
  Budget budget;
};

struct PipelineState {
  std::string e0;
  std::string p;
  std::string q;
  std::size_t edge_count = 0;    // |E(G)|
  std::size_t vertex_count = 0;  // n
  std::vector<std::string> E0;
  std::vector<std::string> E1;
  std::vector<std::string> E2;
  std::vector<std::string> Eprime;
  std::vector<std::string> V1;
  std::vector<std::string> V2;
  int bipartition_attempts = 0;
  bool bipartition_fallback = false;
  int k = 0;  // used by the fan filtering, raised past any pairwise-crossing set of E1
  std::vector<MainPoint> main_points;  // E' in order along e0
  std::vector<std::pair<std::string, std::string>> labels;  // (p_i, q_i)
  SymbolSequence S1;
  SymbolSequence S2;
  std::vector<Check> accounting;
};

/// The construction on a drawing with an edge e0 crossing every edge not
/// incident to its ends. Errors: kInvalidDrawing, kUnknownId,
/// kNotAllCrossing, kCoincidentCrossings and kBudgetExceeded. When E1 holds
/// k pairwise crossing edges the filtering runs with k = (largest such set) + 1.
PipelineState build_pipeline_state(const Drawing& d, const std::string& e0,
                                   const PipelineOptions& options);

/// Greedy 2l-regular subsequences of S1 and S2, the longer one reaching
/// ceil(|E'|/(8l)).
Check regular_length_check(const PipelineState& s, int l);

/// Prefix bound |R(S1[1..j])| + |R(S2[1..j])| >= j/(4l) for every j.
Check prefix_regular_check(const PipelineState& s, int l);

/// Window bound |I(S1[j1..j2])| + |I(S2[j1..j2])| >= 2 sqrt(j2 - j1 + 1).
Check window_support_check(const PipelineState& s);

/// Subcurves from a shared endpoint to the first crossing with e0 are
/// pairwise disjoint across E'.
Check shared_endpoint_check(const Drawing& d, const PipelineState& s);

/// Fans read off an up-type witness in S1 (`first` true) or S2: fan i has
/// apex at the i-th witness symbol, its curves run from the apex to their
/// main points, and e0 is cut between consecutive blocks.
GroundedFanSystem fans_from_witness(const Drawing& d, const PipelineState& s, bool first,
                                    const UpWitness& w, int l, int m);

struct WitnessProbe {
  UpWitness witness;
  std::vector<std::string> edges;     // E' edges selected by the witness
  std::size_t max_crossing_set = 0;   // among those edges
  bool k_crossing = false;
  bool grounded = false;
  std::optional<std::size_t> use_size;  // extract_use result size when run
  std::string note;
};

struct KeySearch {
  std::optional<WitnessProbe> s1;
  std::optional<WitnessProbe> s2;
};

/// up(l, m) search in S1 and S2; each witness is probed for k pairwise
/// crossing edges and turned into a fan system.
KeySearch lemma_key_search(const Drawing& d, const PipelineState& s, int l, int m, int k,
                           const Budget& budget = {});

struct PipelineReport {
  PipelineState state;
  std::vector<Check> checks;
  KeySearch key;
  int k = 3;
  int l = 1;
  int m = 2;
};

PipelineReport run_pipeline(const Drawing& d, const std::string& e0, const PipelineOptions& options,
                            int l, int m);

std::string format_report_text(const PipelineReport& r);
std::string format_report_csv(const PipelineReport& r);

}  // namespace qpt
