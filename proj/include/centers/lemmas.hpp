// lemmas.hpp — two structural properties of connected graphs, each with an
// exact exponential search capped at order 16, plus exhaustive scans over
// all connected labeled graphs of small orders:
//
//   induced-path property: a graph of radius r contains an induced path on
//   at least 2r-1 vertices.
//
//   geodesic-cycle property: if n <= 3r-2 and diam <= 2r-2, the graph
//   contains a cycle of length 2r or 2r+1 whose internal distances all
//   equal the ambient distances.
#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "centers/enumerate.hpp"
#include "centers/graph.hpp"
#include "centers/metrics.hpp"

namespace centers {

inline constexpr int kExactSearchMaxOrder = 16;

namespace detail {

struct MaskAdjacency {
  int n = 0;
  std::array<std::uint32_t, 16> rows{};
};

inline MaskAdjacency mask_adjacency(const Graph& g) {
  MaskAdjacency a;
  a.n = g.order();
  g.for_each_edge([&](int u, int v) {
    a.rows[u] |= std::uint32_t{1} << v;
    a.rows[v] |= std::uint32_t{1} << u;
  });
  return a;
}

inline MaskAdjacency mask_adjacency(const PackedAdjacency& packed, int n) {
  MaskAdjacency a;
  a.n = n;
  for (int v = 0; v < n; ++v) a.rows[v] = packed.row[v];
  return a;
}

// Depth-first extension over induced paths. `blocked` holds the path plus
// all neighbors of internal path vertices, so extension candidates are
// exactly the vertices keeping the path induced.
inline int longest_induced_path_order(const MaskAdjacency& a) {
  const std::uint32_t all = a.n == 32 ? ~0u : ((std::uint32_t{1} << a.n) - 1);
  int best = a.n >= 1 ? 1 : 0;
  auto dfs = [&](auto&& self, int last, std::uint32_t blocked,
                 int length) -> void {
    if (length > best) best = length;
    if (length + std::popcount(all & ~blocked) <= best) return;
    std::uint32_t candidates = a.rows[last] & ~blocked;
    while (candidates != 0) {
      const int w = std::countr_zero(candidates);
      candidates &= candidates - 1;
      self(self, w, blocked | a.rows[last] | (std::uint32_t{1} << w),
           length + 1);
    }
  };
  for (int v = 0; v < a.n; ++v) dfs(dfs, v, std::uint32_t{1} << v, 1);
  return best;
}

inline void all_pairs_distances(const MaskAdjacency& a,
                                std::array<std::array<int, 16>, 16>& dist) {
  for (int src = 0; src < a.n; ++src) {
    auto& d = dist[src];
    d.fill(kUnreachable);
    d[src] = 0;
    std::uint32_t seen = std::uint32_t{1} << src;
    std::uint32_t frontier = seen;
    int depth = 0;
    while (frontier != 0) {
      std::uint32_t next = 0;
      std::uint32_t f = frontier;
      while (f != 0) {
        next |= a.rows[std::countr_zero(f)];
        f &= f - 1;
      }
      next &= ~seen;
      seen |= next;
      ++depth;
      std::uint32_t nn = next;
      while (nn != 0) {
        d[std::countr_zero(nn)] = depth;
        nn &= nn - 1;
      }
      frontier = next;
    }
  }
}

// Searches for a cycle c0..c_{L-1} whose pairwise ambient distances equal
// the cycle distances min(|i-j|, L-|i-j|). The distance matrix prunes every
// partial sequence exactly; c0 is pinned to the cycle's smallest label.
inline bool has_geodesic_cycle(const MaskAdjacency& a,
                               const std::array<std::array<int, 16>, 16>& dist,
                               int length) {
  if (length < 3 || length > a.n) return false;
  std::array<int, 16> seq{};
  auto dfs = [&](auto&& self, int position, std::uint32_t used) -> bool {
    if (position == length) return true;
    std::uint32_t candidates =
        a.rows[seq[position - 1]] & ~used & ~((std::uint32_t{1} << seq[0]) - 1);
    while (candidates != 0) {
      const int w = std::countr_zero(candidates);
      candidates &= candidates - 1;
      bool ok = true;
      for (int j = 0; j < position && ok; ++j) {
        const int along = position - j;
        ok = dist[seq[j]][w] == std::min(along, length - along);
      }
      if (!ok) continue;
      seq[position] = w;
      if (self(self, position + 1, used | (std::uint32_t{1} << w)))
        return true;
    }
    return false;
  };
  for (int start = 0; start + length <= a.n; ++start) {
    seq[0] = start;
    if (dfs(dfs, 1, std::uint32_t{1} << start)) return true;
  }
  return false;
}

}  // namespace detail

inline int longest_induced_path_order(const Graph& g) {
  if (g.order() > kExactSearchMaxOrder)
    fail(Errc::order_too_large, "induced-path search supports order <= 16");
  return detail::longest_induced_path_order(detail::mask_adjacency(g));
}

inline bool has_geodesic_cycle(const Graph& g, std::span<const int> lengths) {
  if (g.order() > kExactSearchMaxOrder)
    fail(Errc::order_too_large, "geodesic-cycle search supports order <= 16");
  const auto a = detail::mask_adjacency(g);
  std::array<std::array<int, 16>, 16> dist;
  detail::all_pairs_distances(a, dist);
  for (const int length : lengths)
    if (detail::has_geodesic_cycle(a, dist, length)) return true;
  return false;
}

// Connected g of radius r must contain an induced path on 2r-1 vertices.
inline bool check_induced_path_property(const Graph& g) {
  const MetricProfile p = metric_profile(g);
  return longest_induced_path_order(g) >= 2 * p.radius - 1;
}

enum class GeodesicCycleCheck { vacuous, holds, fails };

inline std::string_view to_string(GeodesicCycleCheck c) {
  switch (c) {
    case GeodesicCycleCheck::vacuous: return "Vacuous";
    case GeodesicCycleCheck::holds: return "Holds";
    case GeodesicCycleCheck::fails: return "Fails";
  }
  return "Unknown";
}

inline GeodesicCycleCheck check_geodesic_cycle_property(const Graph& g) {
  const MetricProfile p = metric_profile(g);
  if (!(g.order() <= 3 * p.radius - 2 && p.diameter <= 2 * p.radius - 2))
    return GeodesicCycleCheck::vacuous;
  const std::array<int, 2> lengths{2 * p.radius, 2 * p.radius + 1};
  return has_geodesic_cycle(g, lengths) ? GeodesicCycleCheck::holds
                                        : GeodesicCycleCheck::fails;
}

struct PropertyScanResult {
  int order = 0;
  std::uint64_t connected_graphs = 0;
  std::uint64_t checked = 0;
  std::uint64_t vacuous = 0;
  std::vector<std::uint64_t> violations;  // edge masks, ascending
};

namespace detail {

template <class PerGraph>
PropertyScanResult scan_connected_graphs(int n, int jobs, PerGraph&& check) {
  check_enumeration_order(n);
  const int edge_bits = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << edge_bits;
  const int workers =
      static_cast<int>(std::min<std::uint64_t>(resolve_jobs(jobs), total));
  static const auto bit_table = edge_bit_table();

  std::vector<PropertyScanResult> outputs(workers);
  auto run = [&](std::uint64_t lo, std::uint64_t hi, PropertyScanResult* out) {
    out->order = n;
    std::uint64_t gray = lo ^ (lo >> 1);
    PackedAdjacency adj = adjacency_from_mask(n, gray);
    for (std::uint64_t i = lo;; ++i) {
      const PackedMetrics m = packed_metrics(adj, n);
      if (m.connected) {
        ++out->connected_graphs;
        check(adj, m, gray, *out);
      }
      if (i + 1 >= hi) break;
      const int flip = std::countr_zero(i + 1);
      gray ^= std::uint64_t{1} << flip;
      adj.flip_edge(bit_table[flip].u, bit_table[flip].v);
    }
  };

  if (workers == 1) {
    run(0, total, &outputs[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int j = 0; j < workers; ++j) {
      const std::uint64_t lo =
          total / workers * j + std::min<std::uint64_t>(j, total % workers);
      const std::uint64_t hi = total / workers * (j + 1) +
                               std::min<std::uint64_t>(j + 1, total % workers);
      pool.emplace_back(run, lo, hi, &outputs[j]);
    }
    for (auto& t : pool) t.join();
  }

  PropertyScanResult result;
  result.order = n;
  for (auto& out : outputs) {
    result.connected_graphs += out.connected_graphs;
    result.checked += out.checked;
    result.vacuous += out.vacuous;
    result.violations.insert(result.violations.end(), out.violations.begin(),
                             out.violations.end());
  }
  std::sort(result.violations.begin(), result.violations.end());
  return result;
}

}  // namespace detail

// Checks the induced-path property on every connected labeled graph of
// order n.
inline PropertyScanResult scan_induced_path_property(int n, int jobs = 0) {
  return detail::scan_connected_graphs(
      n, jobs,
      [](const detail::PackedAdjacency& adj, const detail::PackedMetrics& m,
         std::uint64_t mask, PropertyScanResult& out) {
        ++out.checked;
        const auto a = detail::mask_adjacency(adj, out.order);
        if (detail::longest_induced_path_order(a) < 2 * m.radius - 1)
          out.violations.push_back(mask);
      });
}

// Checks the geodesic-cycle property on every connected labeled graph of
// order n; graphs outside the precondition count as vacuous.
inline PropertyScanResult scan_geodesic_cycle_property(int n, int jobs = 0) {
  return detail::scan_connected_graphs(
      n, jobs,
      [](const detail::PackedAdjacency& adj, const detail::PackedMetrics& m,
         std::uint64_t mask, PropertyScanResult& out) {
        if (!(out.order <= 3 * m.radius - 2 && m.diameter <= 2 * m.radius - 2)) {
          ++out.vacuous;
          return;
        }
        ++out.checked;
        const auto a = detail::mask_adjacency(adj, out.order);
        std::array<std::array<int, 16>, 16> dist;
        detail::all_pairs_distances(a, dist);
        if (!detail::has_geodesic_cycle(a, dist, 2 * m.radius) &&
            !detail::has_geodesic_cycle(a, dist, 2 * m.radius + 1))
          out.violations.push_back(mask);
      });
}

}  // namespace centers
