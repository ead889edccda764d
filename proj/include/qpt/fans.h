#pragma once

#include "qpt/geometry.h"
#include "qpt/numeric.h"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qpt {

/// Partition of a ground curve, parametrized by a rational position,
/// into pieces [cuts[j], cuts[j + 1]]. No cuts means no pieces.
struct GroundPartition {
  std::vector<Rational> cuts;

  std::size_t pieces() const { return cuts.empty() ? 0 : cuts.size() - 1; }
  bool in_piece(std::size_t j, const Rational& x) const {
    return cuts[j] <= x && x <= cuts[j + 1];
  }
  bool in_range(const Rational& x) const {
    return !cuts.empty() && cuts.front() <= x && x <= cuts.back();
  }

  friend bool operator==(const GroundPartition&, const GroundPartition&) = default;
};

/// A point where a fan curve meets the ground. `approach` is the side of
/// the curve, traversed from the apex, on which the ground continues
/// towards its far end q: LEFT means turning left there leads to q.
struct Hit {
  Rational position;
  Side approach = Side::kLeft;
};

/// Hits are listed in order along the curve from the apex; the last one is
/// the curve's other endpoint.
struct FanCurve {
  std::string id;
  std::vector<Hit> hits;
};

struct Fan {
  std::string apex;
  bool apex_on_ground = false;
  std::vector<FanCurve> curves;
};

/// Fans grounded with one shared partition.
struct GroundedFanSystem {
  std::vector<Fan> fans;
  GroundPartition ground;
};

/// Curve i ends on piece i, the apex is off the ground, and no hit sits on
/// a cut point (a hit on a cut would belong to two pieces, which breaks the
/// counting behind the extractions).
bool is_grounded(const Fan& fan, const GroundPartition& ground);

/// Grounded, and every hit inside the ground's range lies in the curve's
/// own piece.
bool is_well_grounded(const Fan& fan, const GroundPartition& ground);

bool is_grounded(const GroundedFanSystem& sys);
bool is_well_grounded(const GroundedFanSystem& sys);

Fan restrict_fan(const Fan& fan, std::span<const std::size_t> indices);

/// Side of each curve at its first hit inside the ground's range.
/// Error(kNotGrounded) when a curve never meets that range.
std::vector<Side> classify_sided(const Fan& fan, const GroundPartition& ground);

bool is_one_sided(const Fan& fan, const GroundPartition& ground);

/// x -> floor(log_base x) applied `times` times; a value below base maps
/// to 0.
std::uint64_t iterated_log(std::uint64_t x, std::uint64_t base, int times);

std::uint64_t twostep_size(std::uint64_t m, int t);
std::uint64_t well_grounded_size(std::uint64_t m, int t);
std::uint64_t simultaneous_size(std::uint64_t m, int t, int l);
std::uint64_t one_sided_size(std::uint64_t m, int l);
std::uint64_t one_sided_pairs_size(std::uint64_t m, int l);
std::uint64_t use_size(std::uint64_t m, int t, int l);

/// Indices into the fans' curves, increasing, and the subcurve partition.
/// size_degenerate is set when the size formula gives 0.
struct Extraction {
  std::vector<std::size_t> indices;
  GroundPartition ground;
  bool size_degenerate = false;
};

/// The subcurve is contained in the ground, piece j contains the original
/// piece of indices[j], and curve indices[j] meets the subcurve only within
/// its pieces 0..j.
bool satisfies_twostep(const Fan& fan, const GroundPartition& ground, const Extraction& ext);

/// piece j of ext.ground contains piece indices[j] of ground, and the
/// subcurve lies inside the ground.
bool refines_ground(const GroundPartition& ground, const Extraction& ext);

/// Subfan of floor(log_{t+1} m) curves grounded by a subcurve, curve j
/// meeting it only in pieces 0..j. Error(kNotGrounded) unless grounded,
/// Error(kHitBudget) when a curve has more than t hits.
Extraction extract_twostep(const Fan& fan, const GroundPartition& ground, int t);

/// floor(log_{t+1} log_{t+1} m) curves, well-grounded by a subcurve: the
/// two-step extraction, then again on the result with the order reversed.
Extraction extract_well_grounded_fan(const Fan& fan, const GroundPartition& ground, int t);

/// Common indices, floor(log^(2l)_{t+1} m) of them, and one subcurve that
/// makes all l fans simultaneously well-grounded.
Extraction extract_simultaneous(std::span<const Fan> fans, const GroundPartition& ground, int t);

struct OneSidedExtraction {
  std::vector<std::size_t> indices;
  std::vector<Side> sides;  // per fan
  bool size_degenerate = false;
};

/// ceil(m / 2^l) common indices making every fan one-sided: per fan, keep
/// the first ceil(size/2) curves of the majority side (ties go LEFT).
OneSidedExtraction extract_one_sided(std::span<const Fan> fans, const GroundPartition& ground);

struct OneSidedPairsExtraction {
  std::vector<std::size_t> fan_indices;  // l of the 2l fans
  std::vector<std::size_t> indices;
  Side side = Side::kLeft;
  bool size_degenerate = false;
};

/// Of 2l fans, l that are one-sided to the same side on ceil(m / 2^(2l))
/// common indices.
OneSidedPairsExtraction extract_one_sided_pairs(std::span<const Fan> fans,
                                            const GroundPartition& ground);

struct UseExtraction {
  std::vector<std::size_t> fan_indices;
  std::vector<std::size_t> indices;
  GroundPartition ground;
  Side side = Side::kLeft;
  bool size_degenerate = false;
};

/// Simultaneous extraction on 2l fans followed by the one-sided choice of l
/// fans; the subcurve's pieces are merged so the chosen curves stay
/// well-grounded. ceil(floor(log^(4l)_{t+1} m) / 2^(2l)) indices.
UseExtraction extract_use(std::span<const Fan> fans, const GroundPartition& ground, int t);

}  // namespace qpt
