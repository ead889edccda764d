#pragma once

#include "qpt/drawing.h"

#include <cstdint>
#include <random>
#include <string>

namespace qpt {

/// Deterministic integer in [lo, hi]; modulo reduction keeps results
/// identical across standard library implementations.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// K_n with straight edges and vertices in convex position on the parabola
/// y = x^2. Abscissae are chosen greedily (smallest non-negative integers)
/// so that no three edges pass through one crossing point. 3 <= n <= 12.
Drawing generate_convex_complete(int n);

/// Random valid drawing: n vertices, m edges with up to max_bends interior
/// bends each, integer grid coordinates shifted by small distinct
/// rationals. Candidate edges that break the drawing model are redrawn;
/// Error(kGenerationFailed) after the retry budget.
Drawing generate_random_drawing(int n, int m_edges, int max_bends, std::uint64_t seed);

/// Drawing in which the edge "e0" from vertex "p" to vertex "q" (a
/// horizontal segment) crosses every other edge, and no other edge is
/// incident to p or q. n counts p and q.
Drawing generate_all_crossing_drawing(int n, int m_edges, int max_bends, std::uint64_t seed);

/// Fan of m curves from vertex "apex" above the x-axis to distinct ground
/// vertices "g01", "g02", ... on the x-axis. Bends stay strictly above the
/// axis, so each curve meets the axis only at its end: the two-boundary
/// configuration with the apex and the axis as the boundaries.
Drawing generate_two_boundary_fan(int m, int max_bends, std::uint64_t seed);

}  // namespace qpt
