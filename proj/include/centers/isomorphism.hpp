// isomorphism.hpp — exact isomorphism for small graphs via backtracking
// with iterated neighbor-color refinement, and the uniqueness scan that
// checks whether one reference realizes every (radius, center size) match.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centers/enumerate.hpp"
#include "centers/graph.hpp"

namespace centers {

inline constexpr int kIsomorphismMaxOrder = 12;

namespace detail {

// Jointly refines vertex colors of both graphs: each round a vertex's new
// color is the rank of (old color, sorted multiset of neighbor colors)
// across the union of both vertex sets. Returns false as soon as the color
// histograms diverge (the graphs cannot be isomorphic).
inline bool refine_colors(const Graph& a, const Graph& b,
                          std::vector<int>& color_a,
                          std::vector<int>& color_b) {
  const int n = a.order();
  color_a.assign(n, 0);
  color_b.assign(n, 0);
  using Signature = std::pair<int, std::vector<int>>;
  for (int round = 0; round < n; ++round) {
    auto signature = [](const Graph& g, const std::vector<int>& color,
                        int v) {
      std::vector<int> neigh;
      g.for_each_neighbor(v, [&](int w) { neigh.push_back(color[w]); });
      std::sort(neigh.begin(), neigh.end());
      return Signature{color[v], std::move(neigh)};
    };
    std::vector<Signature> sigs_a(n), sigs_b(n);
    for (int v = 0; v < n; ++v) {
      sigs_a[v] = signature(a, color_a, v);
      sigs_b[v] = signature(b, color_b, v);
    }
    std::vector<Signature> ranking;
    ranking.reserve(2 * n);
    ranking.insert(ranking.end(), sigs_a.begin(), sigs_a.end());
    ranking.insert(ranking.end(), sigs_b.begin(), sigs_b.end());
    std::sort(ranking.begin(), ranking.end());
    ranking.erase(std::unique(ranking.begin(), ranking.end()), ranking.end());
    auto rank_of = [&](const Signature& s) {
      return static_cast<int>(
          std::lower_bound(ranking.begin(), ranking.end(), s) -
          ranking.begin());
    };
    int classes_before = 0;
    {
      std::vector<int> sorted = color_a;
      std::sort(sorted.begin(), sorted.end());
      classes_before = static_cast<int>(
          std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }
    for (int v = 0; v < n; ++v) {
      color_a[v] = rank_of(sigs_a[v]);
      color_b[v] = rank_of(sigs_b[v]);
    }
    std::vector<int> hist_a = color_a, hist_b = color_b;
    std::sort(hist_a.begin(), hist_a.end());
    std::sort(hist_b.begin(), hist_b.end());
    if (hist_a != hist_b) return false;
    const int classes_after = static_cast<int>(
        std::unique(hist_a.begin(), hist_a.end()) - hist_a.begin());
    if (classes_after == classes_before) break;  // stable partition
  }
  return true;
}

}  // namespace detail

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() > kIsomorphismMaxOrder || b.order() > kIsomorphismMaxOrder)
    fail(Errc::order_too_large, "isomorphism test supports order <= " +
                                    std::to_string(kIsomorphismMaxOrder));
  if (a.order() != b.order() || a.edge_count() != b.edge_count())
    return false;
  const int n = a.order();
  std::vector<int> color_a, color_b;
  if (!detail::refine_colors(a, b, color_a, color_b)) return false;

  // Map vertices of a in order of ascending candidate-class size.
  std::vector<int> class_size(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (color_b[u] == color_a[v]) ++class_size[v];
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::pair(class_size[x], x) < std::pair(class_size[y], y);
  });

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int v = order[depth];
    for (int u = 0; u < n; ++u) {
      if (used[u] || color_b[u] != color_a[v]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int w = order[d];
        ok = a.adjacent(v, w) == b.adjacent(u, image[w]);
      }
      if (!ok) continue;
      image[v] = u;
      used[u] = true;
      if (self(self, depth + 1)) return true;
      used[u] = false;
      image[v] = -1;
    }
    return false;
  };
  return extend(extend, 0);
}

struct UniquenessReport {
  bool is_unique = false;
  std::uint64_t match_count = 0;
  std::optional<Graph> counterexample;
};

// Scans every labeled graph of order n (n <= 8) with the given radius and
// center size and reports whether all of them are isomorphic to the
// reference. match_count counts labeled copies.
inline UniquenessReport unique_up_to_iso(int n, int r, int s,
                                         const Graph& reference,
                                         int jobs = 0) {
  check_enumeration_order(n);
  EnumerationOptions opt;
  opt.jobs = jobs;
  opt.retain = [r, s](int radius, int center) {
    return radius == r && center == s;
  };
  const EnumerationResult scan = enumerate_labeled(n, opt);
  UniquenessReport report;
  report.match_count = scan.retained_masks.size();
  report.is_unique = true;
  for (const std::uint64_t mask : scan.retained_masks) {
    Graph g = graph_from_edge_mask(n, mask);
    if (!are_isomorphic(g, reference)) {
      report.is_unique = false;
      report.counterexample = std::move(g);
      break;
    }
  }
  return report;
}

// Corpus-backed variant for orders beyond the built-in scan.
inline UniquenessReport unique_in_corpus(std::istream& corpus, int n, int r,
                                         int s, const Graph& reference,
                                         int jobs = 0) {
  const CorpusScanResult scan = corpus_scan(
      corpus,
      [r, s](int radius, int center) { return radius == r && center == s; },
      jobs);
  if (scan.summary.total_graphs > 0 && scan.summary.order != n)
    fail(Errc::bad_parameters,
         "corpus holds graphs of order " + std::to_string(scan.summary.order) +
             ", expected " + std::to_string(n));
  UniquenessReport report;
  report.match_count = scan.matches.size();
  report.is_unique = true;
  for (const Graph& g : scan.matches) {
    if (!are_isomorphic(g, reference)) {
      report.is_unique = false;
      report.counterexample = g;
      break;
    }
  }
  return report;
}

}  // namespace centers
