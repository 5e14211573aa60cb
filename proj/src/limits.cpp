#include "gorlab/limits.hpp"

#include <atomic>

#include "gorlab/errors.hpp"

namespace gorlab {

namespace {
// Nanoseconds since the steady clock epoch; 0 means no limit.
std::atomic<std::int64_t> deadlineNs{0};
}  // namespace

void setDeadline(std::optional<std::chrono::steady_clock::time_point> when) {
  deadlineNs = when ? std::chrono::duration_cast<std::chrono::nanoseconds>(when->time_since_epoch()).count()
                    : 0;
}

void checkDeadline() {
  const std::int64_t d = deadlineNs.load(std::memory_order_relaxed);
  if (d == 0) return;
  const auto now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                       std::chrono::steady_clock::now().time_since_epoch())
                       .count();
  if (now > d) throw ResourceCapExceeded("time limit reached");
}

}  // namespace gorlab
