#pragma once
#include <limits>

namespace kakeya {

// Shared +infinity sentinel for the discrete valuations v_t, v_X, v_L.
// v(0) = +inf so that v(a*b) = v(a)+v(b) and the ultrametric inequality
// hold without special cases; val_add saturates instead of overflowing.
inline constexpr int val_inf = std::numeric_limits<int>::max();

inline constexpr bool val_is_inf(int v) { return v == val_inf; }

inline constexpr int val_add(int a, int b) {
  if (a == val_inf || b == val_inf) return val_inf;
  return a + b;
}

inline constexpr int val_min(int a, int b) { return a < b ? a : b; }

}  // namespace kakeya
