#include "qpt/budget.h"

#include "qpt/error.h"

#include <cstdlib>
#include <string>

namespace qpt {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("QPT_BUDGET_MS")) {
    char* end = nullptr;
    const long long ms = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || ms < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "QPT_BUDGET_MS must be a non-negative integer, got '" + std::string(env) + "'");
    }
    b.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
  }
  return b;
}

void Budget::check_time() const {
  if (deadline && std::chrono::steady_clock::now() > *deadline) {
    throw Error(ErrorCode::kBudgetExceeded, "time budget exhausted");
  }
}

}  // namespace qpt
