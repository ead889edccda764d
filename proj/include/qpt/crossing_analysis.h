#pragma once

#include "qpt/budget.h"
#include "qpt/drawing.h"
#include "qpt/graph.h"
#include "qpt/numeric.h"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qpt {

/// Maximum clique, as increasing node indices; among maximum cliques the
/// lexicographically smallest index sequence. Error(kBudgetExceeded) when
/// the graph has more than budget.clique_nodes nodes or time runs out.
std::vector<std::size_t> max_clique(const Graph& g, const Budget& budget = {});

/// Maximum set of pairwise crossing edges, as edge ids in id order.
std::vector<std::string> max_pairwise_crossing(const CrossingGraph& g,
                                               const Budget& budget = {});

bool is_k_quasi_planar(const Drawing& d, int k, const Budget& budget = {});

/// Some k pairwise crossing edges, or nullopt when there are none.
std::optional<std::vector<std::string>> find_pairwise_crossing(const CrossingGraph& g, int k,
                                                               const Budget& budget = {});

/// Proper coloring with the minimum number of colors; colors are 0-based.
std::vector<int> optimal_coloring(const Graph& g, const Budget& budget = {});

int chromatic_number(const Graph& g, const Budget& budget = {});

struct SplitWitness {
  std::size_t u = 0;                  // adjacent nodes with equal colors,
  std::size_t v = 0;                  // u before v in the order
  std::vector<std::size_t> interval;  // nodes strictly between u and v
  int interval_chi = 0;               // exact chromatic number of the interval
};

struct ColoringOrDichotomy {
  std::vector<std::vector<std::size_t>> parts;  // the interval partition used
  std::optional<std::vector<int>> coloring;     // colors in 1..2c, per node
  std::optional<SplitWitness> witness;
};

/// Splits `order` into consecutive intervals, each grown while its
/// chromatic number stays at most c, colors odd intervals from {1..c} and even
/// ones from {c+1..2c}. Returns the coloring when proper; otherwise the
/// first monochromatic edge in the order together with the interval between
/// its ends.
ColoringOrDichotomy mcguinness_split(const Graph& g, std::span<const std::size_t> order, int c,
                                     const Budget& budget = {});

/// (1 - 1/(k-1)) m^2 / 2.
Rational turan_edge_bound(long m, int k);

/// Curves listed in clockwise order of their ends on the inner boundary.
/// crosses is indexed by position in `curves`.
struct OrderedCurveFamily {
  std::vector<std::string> curves;
  Graph crosses;
};

/// Pairwise disjoint members, at least ceil(m/(k-1)^2) of them: a curve a
/// disjoint from at least m/(k-1) - 1 others is fixed (smallest id among
/// the candidates), the order is rotated to start at a, and a longest chain
/// of "earlier and disjoint" among a and the curves disjoint from it is
/// returned in order. Error(kKCrossingPresent) with the clique as witness
/// when k members pairwise cross; Error(kPartialOrderViolation) when the
/// relation is not transitive.
std::vector<std::string> disjoint_representatives(const OrderedCurveFamily& f, int k,
                                                  const Budget& budget = {});

/// Indices of `directions` by decreasing counter-clockwise angle from the
/// positive x-axis, i.e. a clockwise sweep. Directions must be distinct.
std::vector<std::size_t> clockwise_order(const std::vector<RationalPoint>& directions);

}  // namespace qpt
