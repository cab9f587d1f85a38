// reduction.hpp — edge-deletion reduction relative to a chordless cycle C:
// while some edge leaving C lies on a cycle, delete a deterministic
// replaceable edge elsewhere on that cycle, until every edge with exactly
// one endpoint in C is a bridge. Deleted edges are always non-bridges, so
// connectivity is preserved, and no cycle edge is ever removed.
//
// The report captures, for each remaining leaving bridge u_i v_i, the
// branch component F_i hanging off v_i, its depth a_i = max distance from
// u_i into F_i, and the tally 2*sum(a_i) - p.
#pragma once

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "centers/graph.hpp"
#include "centers/metrics.hpp"

namespace centers {

struct ReductionReport {
  std::vector<int> cycle;
  std::vector<std::pair<int, int>> removed_edges;   // in deletion order
  std::vector<std::pair<int, int>> cut_edges;       // (u on C, v off C)
  std::vector<std::vector<int>> branches;           // F_i, ascending labels
  std::vector<int> depths;                          // a_i
  long long bound = 0;                              // 2*sum(a_i) - p
};

namespace detail {

using AdjacencySets = std::vector<std::set<int>>;

inline AdjacencySets adjacency_sets(const Graph& g) {
  AdjacencySets adj(g.order());
  g.for_each_edge([&](int u, int v) {
    adj[u].insert(v);
    adj[v].insert(u);
  });
  return adj;
}

// BFS path from -> to, never crossing the banned edge. Neighbors expand in
// ascending label order, so the discovered shortest path is deterministic.
// Empty result means unreachable.
inline std::vector<int> bfs_path_avoiding(const AdjacencySets& adj, int from,
                                          int to,
                                          std::pair<int, int> banned) {
  std::vector<int> parent(adj.size(), -1);
  std::vector<bool> seen(adj.size(), false);
  std::queue<int> queue;
  seen[from] = true;
  queue.push(from);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    if (v == to) break;
    for (const int w : adj[v]) {
      if (seen[w]) continue;
      if ((v == banned.first && w == banned.second) ||
          (v == banned.second && w == banned.first))
        continue;
      seen[w] = true;
      parent[w] = v;
      queue.push(w);
    }
  }
  if (!seen[to]) return {};
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

inline bool is_bridge(const AdjacencySets& adj, int u, int v) {
  return bfs_path_avoiding(adj, u, v, {u, v}).empty();
}

}  // namespace detail

inline std::pair<Graph, ReductionReport> reduce_to_bridges(
    const Graph& g, std::span<const int> cycle) {
  const int n = g.order();
  const int len = static_cast<int>(cycle.size());
  if (len < 3) fail(Errc::not_induced_cycle, "cycle needs at least 3 vertices");
  std::vector<bool> on_cycle(n, false);
  for (const int v : cycle) {
    if (v < 0 || v >= n)
      fail(Errc::not_induced_cycle,
           "cycle vertex " + std::to_string(v) + " not in graph");
    if (on_cycle[v])
      fail(Errc::not_induced_cycle,
           "cycle repeats vertex " + std::to_string(v));
    on_cycle[v] = true;
  }
  std::set<std::pair<int, int>> cycle_edges;
  for (int i = 0; i < len; ++i) {
    const int a = cycle[i], b = cycle[(i + 1) % len];
    if (!g.adjacent(a, b))
      fail(Errc::not_induced_cycle, "cycle vertices " + std::to_string(a) +
                                        " and " + std::to_string(b) +
                                        " are not adjacent");
    cycle_edges.insert({std::min(a, b), std::max(a, b)});
  }
  for (int i = 0; i < len; ++i)
    for (int j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.adjacent(cycle[i], cycle[j]))
        fail(Errc::not_induced_cycle,
             "chord between " + std::to_string(cycle[i]) + " and " +
                 std::to_string(cycle[j]));
    }
  if (!is_connected(g)) fail(Errc::disconnected, "reduction needs a connected graph");

  auto adj = detail::adjacency_sets(g);
  ReductionReport report;
  report.cycle.assign(cycle.begin(), cycle.end());

  auto leaving_edges = [&] {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u) {
      if (!on_cycle[u]) continue;
      for (const int v : adj[u])
        if (!on_cycle[v]) out.push_back({u, v});
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  while (true) {
    std::pair<int, int> pending{-1, -1};
    for (const auto& [u, v] : leaving_edges()) {
      if (!detail::is_bridge(adj, u, v)) {
        pending = {u, v};
        break;
      }
    }
    if (pending.first == -1) break;
    // A cycle through the pending edge: shortest v->u path avoiding it,
    // closed by the edge itself. Delete the smallest path edge outside C.
    const auto path = detail::bfs_path_avoiding(adj, pending.second,
                                                pending.first, pending);
    std::pair<int, int> doomed{-1, -1};
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      std::pair<int, int> e{std::min(path[i], path[i + 1]),
                            std::max(path[i], path[i + 1])};
      if (cycle_edges.count(e) != 0) continue;
      if (doomed.first == -1 || e < doomed) doomed = e;
    }
    adj[doomed.first].erase(doomed.second);
    adj[doomed.second].erase(doomed.first);
    report.removed_edges.push_back(doomed);
  }

  for (const auto& [u, v] : leaving_edges()) {
    report.cut_edges.push_back({u, v});
    // Branch component beyond the bridge, reached from v with uv banned.
    std::vector<bool> in_branch(n, false);
    std::vector<int> stack{v};
    in_branch[v] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const int y : adj[x]) {
        if (in_branch[y] || (x == v && y == u) || (x == u && y == v)) continue;
        in_branch[y] = true;
        stack.push_back(y);
      }
    }
    std::vector<int> branch;
    for (int x = 0; x < n; ++x)
      if (in_branch[x]) branch.push_back(x);

    // Depth from u into the branch, measured in the reduced graph.
    std::vector<int> dist(n, -1);
    dist[u] = 0;
    std::queue<int> queue;
    queue.push(u);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      for (const int y : adj[x])
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          queue.push(y);
        }
    }
    int depth = 0;
    for (const int x : branch) depth = std::max(depth, dist[x]);
    report.branches.push_back(std::move(branch));
    report.depths.push_back(depth);
  }
  long long depth_sum = 0;
  for (const int a : report.depths) depth_sum += a;
  report.bound = 2 * depth_sum - static_cast<long long>(report.depths.size());

  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (const int v : adj[u])
      if (u < v) b.add_edge(u, v);
  return {std::move(b).build(), std::move(report)};
}

}  // namespace centers
