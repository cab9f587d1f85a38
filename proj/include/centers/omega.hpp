// omega.hpp — the feasible set Omega(n, r) of center cardinalities over all
// connected graphs with a given order and radius. Closed form with three
// branches; all comparisons are exact integer arithmetic.
#pragma once

#include <string>
#include <vector>

#include "centers/graph.hpp"

namespace centers {

inline void validate_omega_query(int n, int r) {
  if (n < 3)
    fail(Errc::bad_parameters,
         "order must be at least 3, got " + std::to_string(n));
  if (r < 1 || 2 * r > n)
    fail(Errc::bad_parameters, "radius must satisfy 1 <= r <= n/2, got r = " +
                                   std::to_string(r) + " with n = " +
                                   std::to_string(n));
}

// Membership test; never materializes the set.
inline bool omega_contains(int n, int r, int s) {
  validate_omega_query(n, r);
  if (s < 1 || s > n) return false;
  if (2 * r == n) return s == 2 || s == n;
  if (8 * r <= 3 * n + 2) return s != n - 1;
  // 3n+2 < 8r and 2r < n: {1..n-2r+2} ∪ {6r-2n+1..n-2} ∪ {n}
  if (s <= n - 2 * r + 2) return true;
  return s >= 6 * r - 2 * n + 1 && s != n - 1;
}

inline std::vector<int> omega_set(int n, int r) {
  validate_omega_query(n, r);
  std::vector<int> out;
  out.reserve(n);
  for (int s = 1; s <= n; ++s)
    if (omega_contains(n, r, s)) out.push_back(s);
  return out;
}

// The excluded middle range, when there is one: present exactly when
// 3n+2 < 8r < 4n, spanning {n-2r+3 .. 6r-2n}.
inline bool omega_has_gap(int n, int r) {
  validate_omega_query(n, r);
  return 8 * r > 3 * n + 2 && 2 * r < n;
}

}  // namespace centers
