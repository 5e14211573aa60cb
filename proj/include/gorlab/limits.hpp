#pragma once

#include <chrono>
#include <optional>

namespace gorlab {

// Process-wide wall-clock limit for long computations. Groebner and
// resolution loops poll it and throw ResourceCapExceeded once it passes.
void setDeadline(std::optional<std::chrono::steady_clock::time_point> when);
void checkDeadline();

}  // namespace gorlab
