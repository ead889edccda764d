#include "qpt/fans.h"

#include "qpt/error.h"

#include <algorithm>
#include <stdexcept>

namespace qpt {

namespace {

bool on_cut(const GroundPartition& ground, const Rational& x) {
  return std::binary_search(ground.cuts.begin(), ground.cuts.end(), x);
}

bool increasing(const std::vector<Rational>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i - 1] < v[i])) return false;
  }
  return true;
}

void require_grounded(const Fan& fan, const GroundPartition& ground) {
  if (!is_grounded(fan, ground)) {
    throw Error(ErrorCode::kNotGrounded, "fan at " + fan.apex + " is not grounded by the partition");
  }
}

void require_hit_budget(const Fan& fan, int t) {
  if (t < 1) throw Error(ErrorCode::kInvalidArgument, "t must be at least 1");
  for (const auto& c : fan.curves) {
    if (c.hits.size() > static_cast<std::size_t>(t)) {
      throw Error(ErrorCode::kHitBudget,
                  "curve " + c.id + " meets the ground " + std::to_string(c.hits.size()) +
                      " times, more than t = " + std::to_string(t),
                  {c.id});
    }
  }
}

void postcondition(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("extraction postcondition failed: ") + what);
}

}  // namespace

bool is_grounded(const Fan& fan, const GroundPartition& ground) {
  if (fan.curves.size() != ground.pieces()) return false;
  if (fan.curves.empty()) return true;
  if (fan.apex_on_ground || !increasing(ground.cuts)) return false;
  for (std::size_t i = 0; i < fan.curves.size(); ++i) {
    const auto& hits = fan.curves[i].hits;
    if (hits.empty() || !ground.in_piece(i, hits.back().position)) return false;
    for (const auto& h : hits) {
      if (on_cut(ground, h.position)) return false;
    }
  }
  return true;
}

bool is_well_grounded(const Fan& fan, const GroundPartition& ground) {
  if (!is_grounded(fan, ground)) return false;
  for (std::size_t i = 0; i < fan.curves.size(); ++i) {
    for (const auto& h : fan.curves[i].hits) {
      if (ground.in_range(h.position) && !ground.in_piece(i, h.position)) return false;
    }
  }
  return true;
}

bool is_grounded(const GroundedFanSystem& sys) {
  return std::all_of(sys.fans.begin(), sys.fans.end(),
                     [&](const Fan& f) { return is_grounded(f, sys.ground); });
}

bool is_well_grounded(const GroundedFanSystem& sys) {
  return std::all_of(sys.fans.begin(), sys.fans.end(),
                     [&](const Fan& f) { return is_well_grounded(f, sys.ground); });
}

Fan restrict_fan(const Fan& fan, std::span<const std::size_t> indices) {
  Fan out{fan.apex, fan.apex_on_ground, {}};
  for (std::size_t i : indices) out.curves.push_back(fan.curves.at(i));
  return out;
}

std::vector<Side> classify_sided(const Fan& fan, const GroundPartition& ground) {
  std::vector<Side> sides;
  for (const auto& c : fan.curves) {
    auto it = std::find_if(c.hits.begin(), c.hits.end(),
                           [&](const Hit& h) { return ground.in_range(h.position); });
    if (it == c.hits.end()) {
      throw Error(ErrorCode::kNotGrounded, "curve " + c.id + " never meets the ground", {c.id});
    }
    sides.push_back(it->approach);
  }
  return sides;
}

bool is_one_sided(const Fan& fan, const GroundPartition& ground) {
  const auto sides = classify_sided(fan, ground);
  return std::all_of(sides.begin(), sides.end(), [&](Side s) { return s == sides.front(); });
}

std::uint64_t iterated_log(std::uint64_t x, std::uint64_t base, int times) {
  if (base < 2) throw Error(ErrorCode::kInvalidArgument, "logarithm base must be at least 2");
  for (int i = 0; i < times; ++i) {
    std::uint64_t e = 0;
    while (x >= base) {
      x /= base;
      ++e;
    }
    x = e;
  }
  return x;
}

namespace {

std::uint64_t ceil_div_pow2(std::uint64_t x, int e) {
  if (e >= 64) return x == 0 ? 0 : 1;
  const std::uint64_t d = std::uint64_t{1} << e;
  return x / d + (x % d != 0 ? 1 : 0);
}

}  // namespace

std::uint64_t twostep_size(std::uint64_t m, int t) { return iterated_log(m, t + 1, 1); }
std::uint64_t well_grounded_size(std::uint64_t m, int t) { return iterated_log(m, t + 1, 2); }
std::uint64_t simultaneous_size(std::uint64_t m, int t, int l) {
  return iterated_log(m, t + 1, 2 * l);
}
std::uint64_t one_sided_size(std::uint64_t m, int l) { return ceil_div_pow2(m, l); }
std::uint64_t one_sided_pairs_size(std::uint64_t m, int l) { return ceil_div_pow2(m, 2 * l); }
std::uint64_t use_size(std::uint64_t m, int t, int l) {
  return ceil_div_pow2(iterated_log(m, t + 1, 4 * l), 2 * l);
}

bool refines_ground(const GroundPartition& ground, const Extraction& ext) {
  const auto& sub = ext.ground;
  if (sub.pieces() != ext.indices.size()) return false;
  if (ext.indices.empty()) return true;
  if (!increasing(sub.cuts)) return false;
  if (sub.cuts.front() < ground.cuts.front() || ground.cuts.back() < sub.cuts.back()) return false;
  for (std::size_t j = 0; j < ext.indices.size(); ++j) {
    const std::size_t i = ext.indices[j];
    if (j > 0 && ext.indices[j - 1] >= i) return false;
    if (i >= ground.pieces()) return false;
    if (ground.cuts[i] < sub.cuts[j] || sub.cuts[j + 1] < ground.cuts[i + 1]) return false;
  }
  return true;
}

bool satisfies_twostep(const Fan& fan, const GroundPartition& ground, const Extraction& ext) {
  if (!refines_ground(ground, ext)) return false;
  const Fan sub = restrict_fan(fan, ext.indices);
  if (!is_grounded(sub, ext.ground)) return false;
  for (std::size_t j = 0; j < sub.curves.size(); ++j) {
    for (const auto& h : sub.curves[j].hits) {
      if (ext.ground.in_range(h.position) && ext.ground.cuts[j + 1] < h.position) return false;
    }
  }
  return true;
}

namespace {

// Recursion on pieces [lo, lo + len) of the ground.
Extraction twostep_range(const Fan& fan, const GroundPartition& ground, int t, std::size_t lo,
                         std::size_t len) {
  Extraction out;
  const auto base = static_cast<std::size_t>(t) + 1;
  if (len < base) return out;
  const std::size_t w = len / base;
  const auto& first = fan.curves[lo].hits;
  std::optional<std::size_t> window;
  for (std::size_t j = lo; j + w <= lo + len && !window; ++j) {
    const Rational& from = ground.cuts[j];
    const Rational& to = ground.cuts[j + w];
    const bool clear = std::none_of(first.begin(), first.end(), [&](const Hit& h) {
      return from <= h.position && h.position <= to;
    });
    if (clear) window = j;
  }
  if (!window) {
    throw Error(ErrorCode::kHitBudget,
                "curve " + fan.curves[lo].id + " leaves no " + std::to_string(w) +
                    " consecutive pieces free",
                {fan.curves[lo].id});
  }
  Extraction rest = twostep_range(fan, ground, t, *window, w);
  out.indices.push_back(lo);
  out.indices.insert(out.indices.end(), rest.indices.begin(), rest.indices.end());
  out.ground.cuts.push_back(ground.cuts[lo]);
  if (rest.indices.empty()) {
    out.ground.cuts.push_back(ground.cuts[lo + 1]);
  } else {
    out.ground.cuts.insert(out.ground.cuts.end(), rest.ground.cuts.begin(), rest.ground.cuts.end());
  }
  return out;
}

Fan reversed_fan(const Fan& fan) {
  Fan out{fan.apex, fan.apex_on_ground, {}};
  for (auto it = fan.curves.rbegin(); it != fan.curves.rend(); ++it) {
    FanCurve c{it->id, {}};
    for (const auto& h : it->hits) {
      c.hits.push_back({-h.position, h.approach == Side::kLeft ? Side::kRight : Side::kLeft});
    }
    out.curves.push_back(std::move(c));
  }
  return out;
}

GroundPartition reversed_ground(const GroundPartition& g) {
  GroundPartition out;
  for (auto it = g.cuts.rbegin(); it != g.cuts.rend(); ++it) out.cuts.push_back(-*it);
  return out;
}

std::vector<std::size_t> compose(const std::vector<std::size_t>& outer,
                                 const std::vector<std::size_t>& inner) {
  std::vector<std::size_t> out;
  for (std::size_t i : inner) out.push_back(outer[i]);
  return out;
}

}  // namespace

Extraction extract_twostep(const Fan& fan, const GroundPartition& ground, int t) {
  require_hit_budget(fan, t);
  require_grounded(fan, ground);
  Extraction out = twostep_range(fan, ground, t, 0, fan.curves.size());
  out.size_degenerate = out.indices.empty();
  postcondition(out.indices.size() == twostep_size(fan.curves.size(), t), "two-step size");
  postcondition(satisfies_twostep(fan, ground, out), "two-step properties");
  return out;
}

Extraction extract_well_grounded_fan(const Fan& fan, const GroundPartition& ground, int t) {
  const Extraction first = extract_twostep(fan, ground, t);
  const Fan star = restrict_fan(fan, first.indices);
  const Fan rev = reversed_fan(star);
  const Extraction second = extract_twostep(rev, reversed_ground(first.ground), t);

  Extraction out;
  const std::size_t s = star.curves.size();
  for (auto it = second.indices.rbegin(); it != second.indices.rend(); ++it) {
    out.indices.push_back(first.indices[s - 1 - *it]);
  }
  out.ground = reversed_ground(second.ground);
  out.size_degenerate = out.indices.empty();
  postcondition(out.indices.size() == well_grounded_size(fan.curves.size(), t),
                "well-grounded size");
  postcondition(refines_ground(ground, out), "well-grounded refinement");
  postcondition(is_well_grounded(restrict_fan(fan, out.indices), out.ground), "well-grounded");
  return out;
}

Extraction extract_simultaneous(std::span<const Fan> fans, const GroundPartition& ground, int t) {
  if (fans.empty()) throw Error(ErrorCode::kInvalidArgument, "need at least one fan");
  for (const auto& f : fans) {
    require_hit_budget(f, t);
    require_grounded(f, ground);
  }
  Extraction head = extract_well_grounded_fan(fans.front(), ground, t);
  Extraction out = head;
  if (fans.size() > 1) {
    std::vector<Fan> rest;
    for (std::size_t i = 1; i < fans.size(); ++i) rest.push_back(restrict_fan(fans[i], head.indices));
    const Extraction tail = extract_simultaneous(rest, head.ground, t);
    out.indices = compose(head.indices, tail.indices);
    out.ground = tail.ground;
  }
  out.size_degenerate = out.indices.empty();
  postcondition(out.indices.size() ==
                    simultaneous_size(fans.front().curves.size(), t, static_cast<int>(fans.size())),
                "simultaneous size");
  postcondition(refines_ground(ground, out), "simultaneous refinement");
  for (const auto& f : fans) {
    postcondition(is_well_grounded(restrict_fan(f, out.indices), out.ground),
                  "simultaneously well-grounded");
  }
  return out;
}

OneSidedExtraction extract_one_sided(std::span<const Fan> fans, const GroundPartition& ground) {
  if (fans.empty()) throw Error(ErrorCode::kInvalidArgument, "need at least one fan");
  const std::size_t m = fans.front().curves.size();
  for (const auto& f : fans) require_grounded(f, ground);

  OneSidedExtraction out;
  std::vector<std::size_t> current(m);
  for (std::size_t i = 0; i < m; ++i) current[i] = i;
  for (const auto& f : fans) {
    const auto sides = classify_sided(restrict_fan(f, current), ground);
    const auto left = static_cast<std::size_t>(std::count(sides.begin(), sides.end(), Side::kLeft));
    const Side keep = 2 * left >= sides.size() ? Side::kLeft : Side::kRight;
    const std::size_t want = (current.size() + 1) / 2;
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < current.size() && next.size() < want; ++i) {
      if (sides[i] == keep) next.push_back(current[i]);
    }
    current = std::move(next);
    out.sides.push_back(keep);
  }
  out.indices = std::move(current);
  out.size_degenerate = out.indices.empty();
  postcondition(out.indices.size() == one_sided_size(m, static_cast<int>(fans.size())),
                "one-sided size");
  return out;
}

OneSidedPairsExtraction extract_one_sided_pairs(std::span<const Fan> fans,
                                            const GroundPartition& ground) {
  if (fans.empty() || fans.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "need an even, positive number of fans");
  }
  const auto sided = extract_one_sided(fans, ground);
  const auto left =
      static_cast<std::size_t>(std::count(sided.sides.begin(), sided.sides.end(), Side::kLeft));
  OneSidedPairsExtraction out;
  out.side = 2 * left >= fans.size() ? Side::kLeft : Side::kRight;
  const std::size_t l = fans.size() / 2;
  for (std::size_t i = 0; i < fans.size() && out.fan_indices.size() < l; ++i) {
    if (sided.sides[i] == out.side) out.fan_indices.push_back(i);
  }
  out.indices = sided.indices;
  out.size_degenerate = out.indices.empty();
  return out;
}

UseExtraction extract_use(std::span<const Fan> fans, const GroundPartition& ground, int t) {
  if (fans.empty() || fans.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "need an even, positive number of fans");
  }
  const std::size_t m = fans.front().curves.size();
  const int l = static_cast<int>(fans.size() / 2);
  const Extraction sim = extract_simultaneous(fans, ground, t);

  UseExtraction out;
  out.ground = sim.ground;
  if (!sim.indices.empty()) {
    std::vector<Fan> sub;
    for (const auto& f : fans) sub.push_back(restrict_fan(f, sim.indices));
    const auto pick = extract_one_sided_pairs(sub, sim.ground);
    out.fan_indices = pick.fan_indices;
    out.side = pick.side;
    out.indices = compose(sim.indices, pick.indices);
    // Merge pieces so that each chosen curve keeps its own piece.
    GroundPartition merged;
    merged.cuts.push_back(sim.ground.cuts.front());
    for (std::size_t s = 1; s < pick.indices.size(); ++s) {
      merged.cuts.push_back(sim.ground.cuts[pick.indices[s]]);
    }
    merged.cuts.push_back(sim.ground.cuts.back());
    out.ground = std::move(merged);
  } else {
    out.ground = GroundPartition{};
    for (std::size_t i = 0; i < static_cast<std::size_t>(l); ++i) out.fan_indices.push_back(i);
  }
  out.size_degenerate = out.indices.empty();

  postcondition(out.indices.size() == use_size(m, t, l), "use size");
  postcondition(refines_ground(ground, Extraction{out.indices, out.ground, false}),
                "use refinement");
  for (std::size_t i : out.fan_indices) {
    const Fan f = restrict_fan(fans[i], out.indices);
    postcondition(is_well_grounded(f, out.ground), "use well-grounded");
    if (!out.indices.empty()) {
      const auto sides = classify_sided(f, out.ground);
      postcondition(std::all_of(sides.begin(), sides.end(), [&](Side s) { return s == out.side; }),
                    "use one-sided");
    }
  }
  return out;
}

}  // namespace qpt
