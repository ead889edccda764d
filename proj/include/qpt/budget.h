#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

namespace qpt {

/// Limits for the exponential exact searches. Node limits bound the input
/// size; the optional deadline bounds wall time.
struct Budget {
  std::size_t clique_nodes = 64;
  std::size_t chi_nodes = 32;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  /// Defaults, with a deadline taken from QPT_BUDGET_MS when it is set.
  static Budget from_env();

  /// Throws Error(kBudgetExceeded) once the deadline has passed.
  void check_time() const;
};

}  // namespace qpt
