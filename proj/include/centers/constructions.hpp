// constructions.hpp — witness-graph families realizing any feasible
// (order, radius, center cardinality) triple, plus the dispatcher that
// picks a family for a concrete target and the validation report.
//
// Every constructor documents its labeling so outputs are reproducible;
// correctness is asserted on metric invariants, not on labels.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centers/graph.hpp"
#include "centers/metrics.hpp"
#include "centers/omega.hpp"

namespace centers {

// Broom B(n, k): a star with one edge subdivided into a spine of diameter k.
// Labeling: spine 0..k with edges (i, i+1); leaves k+1..n-1 all adjacent to
// vertex 1. The joint (unique vertex of degree >= 3 when leaves exist, the
// neighbor of end 0 otherwise) is always vertex 1.
inline constexpr int kBroomJoint = 1;

inline Graph broom(int n, int k) {
  if (k < 2 || k > n - 1)
    fail(Errc::bad_parameters, "broom(n, k) needs 2 <= k <= n-1, got n = " +
                                   std::to_string(n) + ", k = " +
                                   std::to_string(k));
  GraphBuilder b(n);
  for (int i = 0; i < k; ++i) b.add_edge(i, i + 1);
  for (int v = k + 1; v < n; ++v) b.add_edge(kBroomJoint, v);
  return std::move(b).build();
}

// Lollipop L(n, k): cycle of length k sharing exactly one vertex with a
// path, the shared vertex being a path end. Labeling: cycle 0..k-1, path
// k..n-1 hung off cycle vertex 0; L(n, n) is the plain cycle.
inline Graph lollipop(int n, int k) {
  if (k < 3 || k > n)
    fail(Errc::bad_parameters, "lollipop(n, k) needs 3 <= k <= n, got n = " +
                                   std::to_string(n) + ", k = " +
                                   std::to_string(k));
  GraphBuilder b(n);
  for (int i = 0; i < k; ++i) b.add_edge(i, (i + 1) % k);
  if (n > k) {
    b.add_edge(0, k);
    for (int v = k; v + 1 < n; ++v) b.add_edge(v, v + 1);
  }
  return std::move(b).build();
}

// Clique of size s joined to an independent set of size n-s. For
// s <= n-2 this has radius 1 with the clique as its center; s = n-1
// degenerates to the complete graph.
inline Graph join_family(int n, int s) {
  if (s < 1 || s > n)
    fail(Errc::bad_parameters, "join_family(n, s) needs 1 <= s <= n");
  if (s == n) return complete_graph(n);
  return join(complete_graph(s), empty_graph(n - s));
}

// Broom B(n-s+2, 2r-1) plus s-2 extra vertices, each adjacent to the two
// central spine vertices r-1 and r. Radius r, center of size s.
// Extras take labels n-s+2..n-1.
inline Graph g1(int n, int r, int s) {
  if (r < 2 || 2 * r >= n || s < 2 || s > n - 2 * r + 2)
    fail(Errc::bad_parameters, "g1 needs r >= 2, 2r < n, 2 <= s <= n-2r+2");
  const int base_order = n - s + 2;
  const Graph base = broom(base_order, 2 * r - 1);
  GraphBuilder b(n);
  base.for_each_edge([&](int u, int v) { b.add_edge(u, v); });
  for (int v = base_order; v < n; ++v) {
    b.add_edge(r - 1, v);
    b.add_edge(r, v);
  }
  return std::move(b).build();
}

// Odd center sizes in the upper block: s = 2(r-k)+1 with k = (2r+1-s)/2.
// Either the lollipop L(n, 2r) (when n = 2r+k) or a cycle of length 2r
// with the joint of broom(n-2r+1, k+1) merged into cycle vertex 0.
inline Graph g2(int n, int r, int s) {
  if (r < 2 || 2 * r >= n || s < 1 || s % 2 == 0 || s > 2 * r - 1 ||
      s < 6 * r - 2 * n + 1)
    fail(Errc::bad_parameters,
         "g2 needs r >= 2, 2r < n and odd s with max(1, 6r-2n+1) <= s <= 2r-1");
  const int k = (2 * r + 1 - s) / 2;
  if (n == 2 * r + k) return lollipop(n, 2 * r);
  return identify(cycle_graph(2 * r), 0, broom(n - 2 * r + 1, k + 1),
                  kBroomJoint);
}

// Even center sizes in the upper block: s = 2(r-k) with k = (2r-s)/2.
// Base is the lollipop L(2r+1, 2r) (cycle 0..2r-1, leaf 2r hanging off
// vertex 0); the leaf's eccentric vertex is the cycle antipode r, and a
// path or broom is grafted there.
inline Graph g3(int n, int r, int s) {
  if (r < 2 || 2 * r + 1 >= n || s < 2 || s % 2 != 0 || s > 2 * r - 2)
    fail(Errc::bad_parameters,
         "g3 needs r >= 2, 2r+1 < n and even s with 2 <= s <= 2r-2");
  const int k = (2 * r - s) / 2;
  if (k > n - 2 * r - 1)
    fail(Errc::bad_parameters, "g3 needs k = (2r-s)/2 <= n-2r-1");
  const Graph base = lollipop(2 * r + 1, 2 * r);
  if (n == 2 * r + k + 1) return identify(base, r, path_graph(k + 1), 0);
  return identify(base, r, broom(n - 2 * r, k + 1), kBroomJoint);
}

// Large center sizes: s = 2r+k-1. Cycle 0..2r-1, n-2r-k pendants on
// vertex 0, and k vertices bridging vertices 1 and 2r-1. The non-central
// vertices are the pendants plus the antipodal cycle vertex r (for r >= 3;
// with r = 2 the bridging vertices sit at distance 3 from the pendants and
// fall out of the center, so the dispatcher never routes r = 2 here).
inline Graph g4(int n, int r, int s) {
  if (r < 2 || 2 * r + 1 >= n || s < 2 * r || s > n - 2)
    fail(Errc::bad_parameters, "g4 needs r >= 2, 2r+1 < n, 2r <= s <= n-2");
  const int k = s - 2 * r + 1;
  GraphBuilder b(n);
  for (int i = 0; i < 2 * r; ++i) b.add_edge(i, (i + 1) % (2 * r));
  const int pendants = n - 2 * r - k;
  for (int v = 2 * r; v < 2 * r + pendants; ++v) b.add_edge(0, v);
  for (int v = n - k; v < n; ++v) {
    b.add_edge(1, v);
    b.add_edge(2 * r - 1, v);
  }
  return std::move(b).build();
}

// Self-centered family: cycle 0..2r-1 plus n-2r vertices bridging
// vertices 1 and 2r-1.
inline Graph g5(int n, int r) {
  if (r < 2 || 2 * r >= n)
    fail(Errc::bad_parameters, "g5 needs r >= 2 and 2r < n");
  GraphBuilder b(n);
  for (int i = 0; i < 2 * r; ++i) b.add_edge(i, (i + 1) % (2 * r));
  for (int v = 2 * r; v < n; ++v) {
    b.add_edge(1, v);
    b.add_edge(2 * r - 1, v);
  }
  return std::move(b).build();
}

enum class WitnessCase {
  join_family,
  broom_single_center,
  g1,
  g2_lollipop,
  g2_broom_on_cycle,
  g3_path,
  g3_broom,
  g4,
  g5,
  half_path,
  half_cycle,
};

inline std::string_view to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::join_family: return "JoinFamily";
    case WitnessCase::broom_single_center: return "BroomCase1";
    case WitnessCase::g1: return "G1";
    case WitnessCase::g2_lollipop: return "G2Lollipop";
    case WitnessCase::g2_broom_on_cycle: return "G2BroomOnCycle";
    case WitnessCase::g3_path: return "G3Path";
    case WitnessCase::g3_broom: return "G3Broom";
    case WitnessCase::g4: return "G4";
    case WitnessCase::g5: return "G5";
    case WitnessCase::half_path: return "HalfPath";
    case WitnessCase::half_cycle: return "HalfCycle";
  }
  return "Unknown";
}

struct WitnessRecipe {
  WitnessCase family{};
  int n = 0;
  int r = 0;
  int s = 0;
  int k = 0;  // auxiliary parameter; 0 when the family has none
};

struct Witness {
  Graph graph;
  WitnessRecipe recipe;
};

// Picks a construction for a feasible (n, r, s). Precedence in overlap
// zones: the half-order cases first, then r = 1, then the s = 1 / s = n
// extremes, then g1 over g4 over g2/g3 (simplest family wins).
inline Witness witness(int n, int r, int s) {
  validate_omega_query(n, r);
  if (!omega_contains(n, r, s))
    fail(Errc::infeasible_target,
         "no graph of order " + std::to_string(n) + " and radius " +
             std::to_string(r) + " has a center of size " + std::to_string(s));
  auto made = [&](Graph g, WitnessCase family, int k = 0) {
    return Witness{std::move(g), WitnessRecipe{family, n, r, s, k}};
  };
  if (2 * r == n) {
    if (s == 2) return made(path_graph(n), WitnessCase::half_path);
    return made(cycle_graph(n), WitnessCase::half_cycle);
  }
  if (r == 1) return made(join_family(n, s), WitnessCase::join_family);
  if (s == 1) return made(broom(n, 2 * r), WitnessCase::broom_single_center);
  if (s == n) return made(g5(n, r), WitnessCase::g5);
  if (s <= n - 2 * r + 2) return made(g1(n, r, s), WitnessCase::g1);
  if (s >= 2 * r) return made(g4(n, r, s), WitnessCase::g4, s - 2 * r + 1);
  if (s % 2 == 1) {
    const int k = (2 * r + 1 - s) / 2;
    return made(g2(n, r, s),
                n == 2 * r + k ? WitnessCase::g2_lollipop
                               : WitnessCase::g2_broom_on_cycle,
                k);
  }
  const int k = (2 * r - s) / 2;
  return made(g3(n, r, s),
              n == 2 * r + k + 1 ? WitnessCase::g3_path : WitnessCase::g3_broom,
              k);
}

struct WitnessCheck {
  std::string name;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
  bool pass = false;
};

struct WitnessValidation {
  std::vector<WitnessCheck> checks;
  bool all_pass = false;
};

// Checks order, connectivity, radius and center size; failures are data,
// never exceptions.
inline WitnessValidation validate_witness(const Graph& g, int n, int r,
                                          int s) {
  WitnessValidation v;
  v.checks.push_back({"order", n, g.order(), g.order() == n});
  const bool connected = is_connected(g);
  v.checks.push_back({"connected", 1, connected ? 1 : 0, connected});
  if (connected) {
    const MetricProfile p = metric_profile(g);
    v.checks.push_back({"radius", r, p.radius, p.radius == r});
    v.checks.push_back({"center_size", s,
                        static_cast<std::int64_t>(p.center.size()),
                        static_cast<std::int64_t>(p.center.size()) == s});
  } else {
    v.checks.push_back({"radius", r, -1, false});
    v.checks.push_back({"center_size", s, -1, false});
  }
  v.all_pass = true;
  for (const auto& c : v.checks) v.all_pass = v.all_pass && c.pass;
  return v;
}

}  // namespace centers
