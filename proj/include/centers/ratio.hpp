// ratio.hpp — a connected graph whose central ratio equals a/b exactly.
// Ratios compare as reduced rationals, so the returned order may be a
// multiple of b (the a = b-1 case doubles to dodge the excluded
// cardinality n-1).
#pragma once

#include <algorithm>

#include "centers/constructions.hpp"

namespace centers {

inline Graph ratio_witness(int a, int b) {
  if (a < 1 || b < a)
    fail(Errc::bad_parameters, "ratio_witness needs 1 <= a <= b");
  if (a == b) return cycle_graph(std::max(b, 3));  // any self-centered graph
  if (a == b - 1) return witness(2 * b, 1, 2 * a).graph;
  return witness(b, 1, a).graph;
}

}  // namespace centers
