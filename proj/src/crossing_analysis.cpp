#include "qpt/crossing_analysis.h"

#include "qpt/error.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace qpt {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t v) { return Mask{1} << v; }

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, const Budget& budget) : budget_(budget), adj_(g.size(), 0) {
    for (std::size_t u = 0; u < g.size(); ++u) {
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.adjacent(u, v)) adj_[u] |= bit(v);
      }
    }
  }

  std::vector<std::size_t> run() {
    if (adj_.empty()) return {};
    const Mask all = adj_.size() == 64 ? ~Mask{0} : bit(adj_.size()) - 1;
    best_ = 0;
    grow(0, all);
    std::vector<std::size_t> chosen;
    find_first(chosen, all);
    return chosen;
  }

 private:
  void tick() {
    if ((++ticks_ & 1023) == 0) budget_.check_time();
  }

  // Number of classes in a greedy coloring of P: an upper bound on any
  // clique inside P.
  int color_bound(Mask p) const {
    int classes = 0;
    while (p) {
      ++classes;
      Mask q = p;
      while (q) {
        const auto v = static_cast<std::size_t>(std::countr_zero(q));
        p &= ~bit(v);
        q &= ~bit(v) & ~adj_[v];
      }
    }
    return classes;
  }

  void grow(int size, Mask p) {
    tick();
    if (p == 0) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + color_bound(p) <= best_) return;
    while (p) {
      if (size + std::popcount(p) <= best_) return;
      const auto v = static_cast<std::size_t>(std::countr_zero(p));
      grow(size + 1, p & adj_[v]);
      p &= ~bit(v);
    }
  }

  // Depth-first in increasing node order, so the first clique of size best_
  // found is the lexicographically smallest one.
  bool find_first(std::vector<std::size_t>& chosen, Mask p) {
    tick();
    if (static_cast<int>(chosen.size()) == best_) return true;
    if (static_cast<int>(chosen.size()) + color_bound(p) < best_) return false;
    while (p) {
      const auto v = static_cast<std::size_t>(std::countr_zero(p));
      chosen.push_back(v);
      if (find_first(chosen, p & adj_[v])) return true;
      chosen.pop_back();
      p &= ~bit(v);
    }
    return false;
  }

  const Budget& budget_;
  std::vector<Mask> adj_;
  int best_ = 0;
  std::size_t ticks_ = 0;
};

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, const Budget& budget)
      : g_(g), budget_(budget), order_(g.size()), color_(g.size(), -1) {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
  }

  bool try_colors(int k) {
    std::fill(color_.begin(), color_.end(), -1);
    return assign(0, k, 0);
  }

  const std::vector<int>& colors() const { return color_; }

 private:
  bool assign(std::size_t i, int k, int used) {
    if ((++ticks_ & 1023) == 0) budget_.check_time();
    if (i == order_.size()) return true;
    const std::size_t v = order_[i];
    // A fresh color is interchangeable with any other fresh color, so only
    // the first unused one is tried.
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool free = true;
      for (std::size_t j = 0; j < i && free; ++j) {
        const std::size_t w = order_[j];
        if (color_[w] == c && g_.adjacent(v, w)) free = false;
      }
      if (!free) continue;
      color_[v] = c;
      if (assign(i + 1, k, std::max(used, c + 1))) return true;
      color_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Budget& budget_;
  std::vector<std::size_t> order_;
  std::vector<int> color_;
  std::size_t ticks_ = 0;
};

}  // namespace

std::vector<std::size_t> max_clique(const Graph& g, const Budget& budget) {
  if (g.size() > budget.clique_nodes || g.size() > 64) {
    throw Error(ErrorCode::kBudgetExceeded,
                "clique search limited to " + std::to_string(std::min<std::size_t>(
                                                  budget.clique_nodes, 64)) +
                    " nodes, graph has " + std::to_string(g.size()));
  }
  return CliqueSearch(g, budget).run();
}

std::vector<std::string> max_pairwise_crossing(const CrossingGraph& g, const Budget& budget) {
  std::vector<std::string> ids;
  for (std::size_t v : max_clique(g.graph(), budget)) ids.push_back(g.nodes()[v]);
  return ids;
}

bool is_k_quasi_planar(const Drawing& d, int k, const Budget& budget) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be at least 2");
  return static_cast<int>(max_clique(crossing_graph(d).graph(), budget).size()) < k;
}

std::optional<std::vector<std::string>> find_pairwise_crossing(const CrossingGraph& g, int k,
                                                               const Budget& budget) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  auto ids = max_pairwise_crossing(g, budget);
  if (static_cast<int>(ids.size()) < k) return std::nullopt;
  ids.resize(static_cast<std::size_t>(k));
  return ids;
}

std::vector<int> optimal_coloring(const Graph& g, const Budget& budget) {
  if (g.size() > budget.chi_nodes) {
    throw Error(ErrorCode::kBudgetExceeded,
                "chromatic search limited to " + std::to_string(budget.chi_nodes) +
                    " nodes, graph has " + std::to_string(g.size()));
  }
  if (g.size() == 0) return {};
  ColoringSearch search(g, budget);
  const int lower = static_cast<int>(max_clique(g, budget).size());
  for (int k = std::max(1, lower);; ++k) {
    if (search.try_colors(k)) return search.colors();
  }
}

int chromatic_number(const Graph& g, const Budget& budget) {
  const auto colors = optimal_coloring(g, budget);
  int chi = 0;
  for (int c : colors) chi = std::max(chi, c + 1);
  return chi;
}

ColoringOrDichotomy mcguinness_split(const Graph& g, std::span<const std::size_t> order, int c,
                                     const Budget& budget) {
  if (c < 1) throw Error(ErrorCode::kInvalidArgument, "c must be at least 1");
  std::vector<std::size_t> position(g.size(), g.size());
  if (order.size() != g.size()) throw Error(ErrorCode::kInvalidArgument, "order is not a permutation");
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.size() || position[order[i]] != g.size()) {
      throw Error(ErrorCode::kInvalidArgument, "order is not a permutation");
    }
    position[order[i]] = i;
  }

  ColoringOrDichotomy out;
  std::vector<std::size_t> current;
  // Each interval is grown as long as its chromatic number stays at most c,
  // so every closed interval has chromatic number exactly c.
  for (std::size_t v : order) {
    current.push_back(v);
    if (current.size() > 1 && chromatic_number(g.induced(current), budget) > c) {
      current.pop_back();
      out.parts.push_back(std::move(current));
      current = {v};
    }
  }
  if (!current.empty()) out.parts.push_back(std::move(current));

  std::vector<int> color(g.size(), 0);
  for (std::size_t i = 0; i < out.parts.size(); ++i) {
    const auto& part = out.parts[i];
    const int offset = i % 2 == 0 ? 1 : c + 1;
    const auto local = optimal_coloring(g.induced(part), budget);
    for (std::size_t j = 0; j < part.size(); ++j) color[part[j]] = offset + local[j];
  }

  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const std::size_t u = order[i];
      const std::size_t v = order[j];
      if (!g.adjacent(u, v) || color[u] != color[v]) continue;
      SplitWitness w;
      w.u = u;
      w.v = v;
      w.interval.assign(order.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                        order.begin() + static_cast<std::ptrdiff_t>(j));
      w.interval_chi = chromatic_number(g.induced(w.interval), budget);
      out.witness = std::move(w);
      return out;
    }
  }
  out.coloring = std::move(color);
  return out;
}

Rational turan_edge_bound(long m, int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be at least 2");
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "m must be non-negative");
  Rational out = (Rational(1) - Rational(1, k - 1)) * Rational(m) * Rational(m) / 2;
  out.canonicalize();
  return out;
}

std::vector<std::string> disjoint_representatives(const OrderedCurveFamily& f, int k,
                                                  const Budget& budget) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be at least 2");
  const std::size_t m = f.curves.size();
  if (f.crosses.size() != m) {
    throw Error(ErrorCode::kInvalidArgument, "crossing relation does not match the family");
  }
  if (m == 0) return {};

  const auto clique = max_clique(f.crosses, budget);
  if (static_cast<int>(clique.size()) >= k) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) ids.push_back(f.curves[clique[i]]);
    throw Error(ErrorCode::kKCrossingPresent, std::to_string(k) + " curves pairwise cross", ids);
  }

  std::optional<std::size_t> a;
  for (std::size_t i = 0; i < m; ++i) {
    const auto deg = f.crosses.degree(i);
    if (static_cast<std::size_t>(k - 1) * (m - deg) < m) continue;
    if (!a || f.curves[i] < f.curves[*a]) a = i;
  }
  if (!a) {
    // Unreachable for K_k-free input: the average number of crossings per
    // curve is below the threshold.
    throw Error(ErrorCode::kInvalidArgument, "no curve meets the disjointness threshold");
  }

  std::vector<std::size_t> members;
  for (std::size_t step = 0; step < m; ++step) {
    const std::size_t i = (*a + step) % m;
    if (i == *a || !f.crosses.adjacent(*a, i)) members.push_back(i);
  }
  const std::size_t s = members.size();
  auto related = [&](std::size_t x, std::size_t y) {  // x, y indices into members
    return x < y && !f.crosses.adjacent(members[x], members[y]);
  };

  for (std::size_t x = 0; x < s; ++x) {
    for (std::size_t y = x + 1; y < s; ++y) {
      if (!related(x, y)) continue;
      for (std::size_t z = y + 1; z < s; ++z) {
        if (related(y, z) && !related(x, z)) {
          throw Error(ErrorCode::kPartialOrderViolation, "order relation is not transitive",
                      {f.curves[members[x]], f.curves[members[y]], f.curves[members[z]]});
        }
      }
    }
  }

  std::vector<std::size_t> length(s, 1);
  std::vector<std::size_t> pred(s, s);
  for (std::size_t y = 0; y < s; ++y) {
    for (std::size_t x = 0; x < y; ++x) {
      if (related(x, y) && length[x] + 1 > length[y]) {
        length[y] = length[x] + 1;
        pred[y] = x;
      }
    }
  }
  std::size_t end = 0;
  for (std::size_t y = 1; y < s; ++y) {
    if (length[y] > length[end]) end = y;
  }
  std::vector<std::string> chain;
  for (std::size_t y = end; y != s; y = pred[y]) chain.push_back(f.curves[members[y]]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<std::size_t> clockwise_order(const std::vector<RationalPoint>& directions) {
  const RationalPoint east{Rational(1), Rational(0)};
  std::vector<std::size_t> idx(directions.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return angle_less(east, directions[b], directions[a]);
  });
  return idx;
}

}  // namespace qpt
