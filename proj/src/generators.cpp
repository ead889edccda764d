#include "qpt/generators.h"

#include "drawing_checker.h"
#include "qpt/error.h"

#include <set>
#include <utility>

namespace qpt {

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

namespace {

constexpr int kEdgeAttempts = 200;

std::string padded(const std::string& prefix, int i, int count) {
  std::string digits = std::to_string(i);
  const std::size_t width = std::max<std::size_t>(2, std::to_string(count).size());
  while (digits.size() < width) digits.insert(digits.begin(), '0');
  return prefix + digits;
}

// Integer in [lo, hi] plus a fraction below 1/4 with a large prime
// denominator, so coincidences are rare and always caught by the checker.
Rational jittered(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  constexpr std::int64_t kDen = 99991;
  const Rational base(static_cast<long>(uniform_int(rng, lo, hi)));
  const Rational frac(static_cast<long>(uniform_int(rng, 1, kDen - 1)), 4 * kDen);
  Rational out = base + frac;
  out.canonicalize();
  return out;
}

std::vector<Rational> convex_abscissae() {
  constexpr int kMax = 12;
  std::vector<Rational> xs;
  for (long x = 0; static_cast<int>(xs.size()) < kMax; ++x) {
    std::vector<Rational> trial = xs;
    trial.emplace_back(x);
    detail::DrawingChecker checker;
    for (std::size_t i = 0; i < trial.size(); ++i) {
      checker.add_vertex({std::to_string(i), {trial[i], trial[i] * trial[i]}});
    }
    bool ok = true;
    for (std::size_t i = 0; i < trial.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < trial.size() && ok; ++j) {
        const Edge e{std::to_string(i) + "_" + std::to_string(j), std::to_string(i),
                     std::to_string(j),
                     PolylineCurve({{trial[i], trial[i] * trial[i]}, {trial[j], trial[j] * trial[j]}})};
        ok = checker.try_add_edge(e);
      }
    }
    if (ok) xs = std::move(trial);
  }
  return xs;
}

struct Builder {
  Drawing drawing;
  detail::DrawingChecker checker;

  bool add_vertex(const std::string& id, const RationalPoint& p) {
    if (!checker.add_vertex({id, p}).empty()) return false;
    drawing.add_vertex(id, p);
    return true;
  }

  bool try_edge(const std::string& id, const std::string& u, const std::string& v,
                std::vector<RationalPoint> bends) {
    std::vector<RationalPoint> pts;
    pts.push_back(drawing.vertex(u).point);
    for (const auto& b : bends) pts.push_back(b);
    pts.push_back(drawing.vertex(v).point);
    const Edge e{id, u, v, PolylineCurve(std::move(pts))};
    if (!checker.try_add_edge(e)) return false;
    drawing.add_edge(id, u, v, std::move(bends));
    return true;
  }
};

[[noreturn]] void generation_failed(const std::string& what) {
  throw Error(ErrorCode::kGenerationFailed, what);
}

}  // namespace

Drawing generate_convex_complete(int n) {
  if (n < 3 || n > 12) {
    throw Error(ErrorCode::kSizeOutOfRange, "convex K_n needs 3 <= n <= 12");
  }
  static const std::vector<Rational> xs = convex_abscissae();
  Drawing d;
  for (int i = 0; i < n; ++i) {
    d.add_vertex(padded("v", i + 1, n), {xs[i], xs[i] * xs[i]});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      d.add_edge(padded("e", i + 1, n) + "_" + padded("", j + 1, n), padded("v", i + 1, n),
                 padded("v", j + 1, n));
    }
  }
  return d;
}

Drawing generate_random_drawing(int n, int m_edges, int max_bends, std::uint64_t seed) {
  if (n < 2 || m_edges < 0 || max_bends < 0) {
    throw Error(ErrorCode::kInvalidArgument, "need n >= 2, m >= 0, bends >= 0");
  }
  if (m_edges > n * (n - 1) / 2) generation_failed("more edges than vertex pairs");
  constexpr std::int64_t kGrid = 20;
  std::mt19937_64 rng(seed);
  Builder b;
  for (int i = 0; i < n; ++i) {
    int tries = 0;
    while (!b.add_vertex(padded("v", i + 1, n), {jittered(rng, 0, kGrid), jittered(rng, 0, kGrid)})) {
      if (++tries > kEdgeAttempts) generation_failed("could not place vertices");
    }
  }
  std::set<std::pair<int, int>> used;
  int budget = kEdgeAttempts * std::max(1, m_edges);
  for (int k = 0; k < m_edges; ++k) {
    bool placed = false;
    while (!placed) {
      if (--budget < 0) generation_failed("edge retry budget exhausted");
      int u = static_cast<int>(uniform_int(rng, 0, n - 1));
      int v = static_cast<int>(uniform_int(rng, 0, n - 1));
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (used.count({u, v})) continue;
      std::vector<RationalPoint> bends;
      const auto count = uniform_int(rng, 0, max_bends);
      for (std::int64_t i = 0; i < count; ++i) {
        bends.push_back({jittered(rng, 0, kGrid), jittered(rng, 0, kGrid)});
      }
      placed = b.try_edge(padded("e", k + 1, m_edges), padded("v", u + 1, n), padded("v", v + 1, n),
                          std::move(bends));
      if (placed) used.insert({u, v});
    }
  }
  return std::move(b.drawing);
}

Drawing generate_all_crossing_drawing(int n, int m_edges, int max_bends, std::uint64_t seed) {
  if (n < 4 || m_edges < 0 || max_bends < 0) {
    throw Error(ErrorCode::kInvalidArgument, "need n >= 4, m >= 0, bends >= 0");
  }
  const int inner = n - 2;
  if (m_edges > inner * (inner - 1) / 2) generation_failed("more edges than vertex pairs");
  constexpr std::int64_t kWidth = 20;
  constexpr std::int64_t kHeight = 10;
  std::mt19937_64 rng(seed);
  Builder b;
  b.add_vertex("p", {Rational(0), Rational(0)});
  b.add_vertex("q", {Rational(kWidth), Rational(0)});

  auto random_point = [&](bool above) {
    Rational y = jittered(rng, 1, kHeight - 1);
    return RationalPoint{jittered(rng, 1, kWidth - 2), above ? y : Rational(-y)};
  };

  std::vector<bool> above(inner);
  for (int i = 0; i < inner; ++i) {
    int tries = 0;
    above[i] = uniform_int(rng, 0, 1) == 1;
    while (!b.add_vertex(padded("v", i + 1, inner), random_point(above[i]))) {
      if (++tries > kEdgeAttempts) generation_failed("could not place vertices");
    }
  }
  if (!b.try_edge("e0", "p", "q", {})) generation_failed("e0 rejected");

  std::set<std::pair<int, int>> used;
  int budget = kEdgeAttempts * std::max(1, m_edges);
  for (int k = 0; k < m_edges; ++k) {
    bool placed = false;
    while (!placed) {
      if (--budget < 0) generation_failed("edge retry budget exhausted");
      int u = static_cast<int>(uniform_int(rng, 0, inner - 1));
      int v = static_cast<int>(uniform_int(rng, 0, inner - 1));
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (used.count({u, v})) continue;
      // Endpoints on the same side need a bend on the other side to reach e0.
      const bool same_side = above[u] == above[v];
      const auto count = std::max<std::int64_t>(same_side ? 1 : 0, uniform_int(rng, 0, max_bends));
      std::vector<RationalPoint> bends;
      const auto forced = same_side ? uniform_int(rng, 0, count - 1) : -1;
      for (std::int64_t i = 0; i < count; ++i) {
        const bool side = i == forced ? !above[u] : uniform_int(rng, 0, 1) == 1;
        bends.push_back(random_point(side));
      }
      placed = b.try_edge(padded("e", k + 1, m_edges), padded("v", u + 1, inner),
                          padded("v", v + 1, inner), std::move(bends));
      if (placed) used.insert({u, v});
    }
  }
  return std::move(b.drawing);
}

Drawing generate_two_boundary_fan(int m, int max_bends, std::uint64_t seed) {
  if (m < 1 || max_bends < 0) throw Error(ErrorCode::kInvalidArgument, "need m >= 1, bends >= 0");
  constexpr std::int64_t kHalfWidth = 20;
  constexpr std::int64_t kHeight = 20;
  std::mt19937_64 rng(seed);
  Builder b;
  b.add_vertex("apex", {jittered(rng, 0, 0), jittered(rng, kHeight / 2, kHeight / 2)});
  for (int i = 0; i < m; ++i) {
    int tries = 0;
    while (!b.add_vertex(padded("g", i + 1, m), {jittered(rng, -kHalfWidth, kHalfWidth), Rational(0)})) {
      if (++tries > kEdgeAttempts) generation_failed("could not place ground points");
    }
  }
  int budget = kEdgeAttempts * m;
  for (int i = 0; i < m; ++i) {
    bool placed = false;
    while (!placed) {
      if (--budget < 0) generation_failed("curve retry budget exhausted");
      std::vector<RationalPoint> bends;
      const auto count = uniform_int(rng, 0, max_bends);
      for (std::int64_t k = 0; k < count; ++k) {
        bends.push_back({jittered(rng, -kHalfWidth, kHalfWidth), jittered(rng, 1, kHeight - 1)});
      }
      placed = b.try_edge(padded("c", i + 1, m), "apex", padded("g", i + 1, m), std::move(bends));
    }
  }
  return std::move(b.drawing);
}

}  // namespace qpt
