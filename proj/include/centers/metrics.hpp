// metrics.hpp — distance invariants: eccentricities, radius, diameter,
// center, periphery and the central ratio (kept as an exact rational).
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "centers/graph.hpp"

namespace centers {

// Marker for vertices a BFS source cannot reach.
inline constexpr int kUnreachable = -1;

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Reduced form with positive denominator.
inline Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den <= 0) fail(Errc::bad_parameters, "rational needs positive denominator");
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

// Hop distances from source; word-parallel frontier expansion.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.order())
    fail(Errc::vertex_out_of_range,
         "bfs source " + std::to_string(source) + " not in graph");
  const int n = g.order();
  const int words = g.words_per_row();
  std::vector<int> dist(n, kUnreachable);
  std::vector<Graph::Word> seen(words, 0), frontier(words, 0), next(words, 0);
  dist[source] = 0;
  seen[source / Graph::kWordBits] |= Graph::Word{1}
                                     << (source % Graph::kWordBits);
  frontier = seen;
  int depth = 0;
  while (true) {
    std::fill(next.begin(), next.end(), Graph::Word{0});
    for (int w = 0; w < words; ++w) {
      Graph::Word word = frontier[w];
      while (word != 0) {
        const int v = w * Graph::kWordBits + std::countr_zero(word);
        word &= word - 1;
        auto row = g.row(v);
        for (int k = 0; k < words; ++k) next[k] |= row[k];
      }
    }
    ++depth;
    bool advanced = false;
    for (int w = 0; w < words; ++w) {
      next[w] &= ~seen[w];
      seen[w] |= next[w];
      Graph::Word word = next[w];
      while (word != 0) {
        dist[w * Graph::kWordBits + std::countr_zero(word)] = depth;
        word &= word - 1;
        advanced = true;
      }
    }
    if (!advanced) break;
    frontier.swap(next);
  }
  return dist;
}

struct MetricProfile {
  int order = 0;
  std::vector<int> eccentricities;
  int radius = 0;
  int diameter = 0;
  std::vector<int> center;     // ascending
  std::vector<int> periphery;  // ascending
  Rational central_ratio;

  bool self_centered() const { return radius == diameter; }
};

// One BFS per vertex; requires a connected graph.
inline MetricProfile metric_profile(const Graph& g) {
  const int n = g.order();
  MetricProfile p;
  p.order = n;
  p.eccentricities.resize(n);
  for (int v = 0; v < n; ++v) {
    const auto dist = bfs_distances(g, v);
    int ecc = 0;
    for (int u = 0; u < n; ++u) {
      if (dist[u] == kUnreachable)
        fail(Errc::disconnected, "eccentricity undefined: vertex " +
                                     std::to_string(u) +
                                     " unreachable from " + std::to_string(v));
      ecc = std::max(ecc, dist[u]);
    }
    p.eccentricities[v] = ecc;
  }
  p.radius = *std::min_element(p.eccentricities.begin(),
                               p.eccentricities.end());
  p.diameter = *std::max_element(p.eccentricities.begin(),
                                 p.eccentricities.end());
  for (int v = 0; v < n; ++v) {
    if (p.eccentricities[v] == p.radius) p.center.push_back(v);
    if (p.eccentricities[v] == p.diameter) p.periphery.push_back(v);
  }
  p.central_ratio =
      make_rational(static_cast<std::int64_t>(p.center.size()), n);
  return p;
}

// A shortest path between some diametral pair. Deterministic: the source is
// the smallest vertex of maximum eccentricity, the target the smallest
// vertex at that distance, and each step takes the smallest-label neighbor
// that stays on a shortest path.
inline std::vector<int> diametral_path(const Graph& g) {
  const MetricProfile p = metric_profile(g);
  const int source = p.periphery.front();
  const auto from_source = bfs_distances(g, source);
  int target = -1;
  for (int v = 0; v < g.order(); ++v) {
    if (from_source[v] == p.diameter) {
      target = v;
      break;
    }
  }
  const auto to_target = bfs_distances(g, target);
  std::vector<int> path{source};
  int current = source;
  while (current != target) {
    int step = -1;
    g.for_each_neighbor(current, [&](int w) {
      if (step == -1 && to_target[w] == to_target[current] - 1) step = w;
    });
    path.push_back(step);
    current = step;
  }
  return path;
}

}  // namespace centers
