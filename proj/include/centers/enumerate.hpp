// enumerate.hpp — exhaustive scan of all labeled simple graphs on up to 8
// vertices, and the same accumulation over external graph6 corpora.
//
// Masks index the upper triangle in column order: bit j(j-1)/2 + i is the
// edge (i, j) for i < j, matching the graph6 body order. The scan walks
// masks in Gray-code order so each step flips a single edge, and computes
// radius and center size with a packed 8x8 bit-matrix closure (one byte
// per adjacency row inside a single 64-bit word).
//
// The mask space splits into contiguous chunks by the top bits of the
// mask; per-chunk tallies merge by addition/union, so results never depend
// on the worker count.
#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "centers/codec.hpp"
#include "centers/graph.hpp"
#include "centers/metrics.hpp"

namespace centers {

inline constexpr int kEnumerationMaxOrder = 8;

// Worker-count resolution: explicit request, else the CENTERS_JOBS
// environment variable, else hardware concurrency.
inline int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CENTERS_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

struct EnumerationSummary {
  int order = 0;
  std::uint64_t total_graphs = 0;
  std::uint64_t connected_graphs = 0;
  // radius -> center size -> number of labeled graphs
  std::map<int, std::map<int, std::uint64_t>> table;

  void merge(const EnumerationSummary& other) {
    total_graphs += other.total_graphs;
    connected_graphs += other.connected_graphs;
    for (const auto& [r, sizes] : other.table)
      for (const auto& [s, count] : sizes) table[r][s] += count;
  }

  std::map<int, std::set<int>> center_sizes_by_radius() const {
    std::map<int, std::set<int>> out;
    for (const auto& [r, sizes] : table)
      for (const auto& [s, count] : sizes)
        if (count > 0) out[r].insert(s);
    return out;
  }
};

namespace detail {

inline constexpr std::uint64_t kLsbBytes = 0x0101010101010101ULL;

// 0x80 in every byte of v that equals zero; exact, no carry bleed.
inline std::uint64_t zero_bytes_mask(std::uint64_t v) {
  constexpr std::uint64_t k7f = 0x7F7F7F7F7F7F7F7FULL;
  return ~(((v & k7f) + k7f) | v | k7f);
}

// Adjacency rows for n <= 8 vertices, one byte per row, plus each row
// broadcast across all byte lanes for the closure step.
struct PackedAdjacency {
  std::array<std::uint8_t, 8> row{};
  std::array<std::uint64_t, 8> bcast{};

  void assign_row(int v, std::uint8_t bits) {
    row[v] = bits;
    bcast[v] = kLsbBytes * bits;
  }

  void flip_edge(int u, int v) {
    assign_row(u, static_cast<std::uint8_t>(row[u] ^ (1u << v)));
    assign_row(v, static_cast<std::uint8_t>(row[v] ^ (1u << u)));
  }
};

struct PackedMetrics {
  bool connected = false;
  int radius = 0;
  int center_size = 0;
  int diameter = 0;
};

// Simultaneous BFS closure of all rows: byte v of `reach` holds the set of
// vertices within the current round's distance of v. A row saturating at
// round t means eccentricity t.
inline PackedMetrics packed_metrics(const PackedAdjacency& adj, int n) {
  const std::uint8_t full =
      static_cast<std::uint8_t>(n == 8 ? 0xFF : ((1u << n) - 1));
  const std::uint64_t live =
      n == 8 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (8 * n)) - 1);
  const std::uint64_t target = (kLsbBytes * full) & live;
  const std::uint64_t dead_sentinel = ~live & kLsbBytes;

  std::uint64_t reach = 0;
  for (int v = 0; v < n; ++v)
    reach |= (static_cast<std::uint64_t>(adj.row[v]) | (1u << v)) << (8 * v);

  PackedMetrics result;
  std::uint64_t done = 0;
  for (int round = 1;; ++round) {
    const std::uint64_t pending = ((reach ^ target) & live) | dead_sentinel;
    const std::uint64_t complete = zero_bytes_mask(pending);
    const std::uint64_t newly = complete & ~done;
    if (newly != 0 && result.center_size == 0) {
      result.radius = round;
      result.center_size = std::popcount(newly);
    }
    done = complete;
    if (std::popcount(done) == n) {
      result.connected = true;
      result.diameter = round;
      return result;
    }
    std::uint64_t next = reach;
    for (int u = 0; u < n; ++u) {
      const std::uint64_t rows_with_u = (reach >> u) & kLsbBytes;
      next |= (rows_with_u * 0xFF) & adj.bcast[u];
    }
    if (next == reach) return result;  // stable before saturation
    reach = next;
  }
}

struct EdgeBit {
  std::uint8_t u, v;
};

inline std::array<EdgeBit, 28> edge_bit_table() {
  std::array<EdgeBit, 28> t{};
  int k = 0;
  for (int j = 1; j < 8; ++j)
    for (int i = 0; i < j; ++i)
      t[k++] = {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
  return t;
}

inline PackedAdjacency adjacency_from_mask(int n, std::uint64_t mask) {
  static const auto bits = edge_bit_table();
  PackedAdjacency adj;
  const int edge_bits = n * (n - 1) / 2;
  for (int k = 0; k < edge_bits; ++k)
    if ((mask >> k) & 1) adj.flip_edge(bits[k].u, bits[k].v);
  return adj;
}

}  // namespace detail

// Retention filter over (radius, center size) of each connected graph.
using TriplePredicate = std::function<bool(int radius, int center_size)>;

struct EnumerationOptions {
  int jobs = 0;
  TriplePredicate retain;  // optional; matching edge masks are collected
};

struct EnumerationResult {
  EnumerationSummary summary;
  std::vector<std::uint64_t> retained_masks;  // ascending
};

inline void check_enumeration_order(int n) {
  if (n < 2 || n > kEnumerationMaxOrder)
    fail(Errc::order_too_large,
         "exhaustive enumeration supports 2 <= n <= 8, got " +
             std::to_string(n));
}

inline EnumerationResult enumerate_labeled(int n,
                                           const EnumerationOptions& opt = {}) {
  check_enumeration_order(n);
  const int edge_bits = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << edge_bits;
  const int jobs =
      static_cast<int>(std::min<std::uint64_t>(resolve_jobs(opt.jobs), total));

  static const auto bit_table = detail::edge_bit_table();

  struct ChunkOutput {
    EnumerationSummary summary;
    std::vector<std::uint64_t> retained;
  };
  std::vector<ChunkOutput> outputs(jobs);

  auto scan_chunk = [&](std::uint64_t lo, std::uint64_t hi, ChunkOutput* out) {
    out->summary.order = n;
    out->summary.total_graphs = hi - lo;
    // radius <= n/2 <= 4 and 1 <= center size <= 8 for connected graphs
    std::array<std::array<std::uint64_t, 9>, 5> counts{};
    std::uint64_t gray = lo ^ (lo >> 1);
    detail::PackedAdjacency adj = detail::adjacency_from_mask(n, gray);
    for (std::uint64_t i = lo;; ++i) {
      const auto m = detail::packed_metrics(adj, n);
      if (m.connected) {
        ++out->summary.connected_graphs;
        ++counts[m.radius][m.center_size];
        if (opt.retain && opt.retain(m.radius, m.center_size))
          out->retained.push_back(gray);
      }
      if (i + 1 >= hi) break;
      const int flip = std::countr_zero(i + 1);
      gray ^= std::uint64_t{1} << flip;
      adj.flip_edge(bit_table[flip].u, bit_table[flip].v);
    }
    for (int r = 1; r <= 4; ++r)
      for (int s = 1; s <= 8; ++s)
        if (counts[r][s] != 0) out->summary.table[r][s] = counts[r][s];
  };

  if (jobs == 1) {
    scan_chunk(0, total, &outputs[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int j = 0; j < jobs; ++j) {
      const std::uint64_t lo = total / jobs * j + std::min<std::uint64_t>(j, total % jobs);
      const std::uint64_t hi =
          total / jobs * (j + 1) + std::min<std::uint64_t>(j + 1, total % jobs);
      workers.emplace_back(scan_chunk, lo, hi, &outputs[j]);
    }
    for (auto& w : workers) w.join();
  }

  EnumerationResult result;
  result.summary.order = n;
  for (auto& out : outputs) {
    result.summary.merge(out.summary);
    result.retained_masks.insert(result.retained_masks.end(),
                                 out.retained.begin(), out.retained.end());
  }
  std::sort(result.retained_masks.begin(), result.retained_masks.end());
  return result;
}

// Radius -> set of attained center sizes over all connected labeled graphs.
inline std::map<int, std::set<int>> empirical_omega(int n, int jobs = 0) {
  if (n < 3) fail(Errc::bad_parameters, "empirical_omega needs n >= 3");
  EnumerationOptions opt;
  opt.jobs = jobs;
  return enumerate_labeled(n, opt).summary.center_sizes_by_radius();
}

inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  GraphBuilder b(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1) b.add_edge(i, j);
  return std::move(b).build();
}

inline std::uint64_t edge_mask_of(const Graph& g) {
  if (g.order() > 11)
    fail(Errc::order_too_large, "edge mask fits orders <= 11 only");
  std::uint64_t mask = 0;
  g.for_each_edge([&](int u, int v) {
    mask |= std::uint64_t{1} << (v * (v - 1) / 2 + u);
  });
  return mask;
}

struct CorpusScanResult {
  EnumerationSummary summary;
  std::vector<Graph> matches;  // in input order
};

// Same accumulation as enumerate_labeled over a stream of graph6 records,
// one per line. All records must decode to graphs of one common order.
inline CorpusScanResult corpus_scan(std::istream& in,
                                    const TriplePredicate& retain = {},
                                    int jobs = 0) {
  std::vector<std::string> lines;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lines.push_back(line);
  }

  CorpusScanResult result;
  result.summary.total_graphs = lines.size();
  if (lines.empty()) return result;

  struct PerRecord {
    int radius = 0;
    int center_size = 0;
    bool connected = false;
    bool matched = false;
  };
  std::vector<PerRecord> records(lines.size());
  std::vector<int> orders(lines.size(), 0);
  std::vector<std::optional<Graph>> decoded(lines.size());

  const int workers =
      static_cast<int>(std::min<std::size_t>(resolve_jobs(jobs), lines.size()));
  std::atomic<std::size_t> cursor{0};
  struct RecordError {
    std::size_t line = 0;
    std::string message;
  };
  std::vector<std::optional<RecordError>> errors(workers);

  auto run = [&](int worker) {
    for (std::size_t i = cursor.fetch_add(1); i < lines.size();
         i = cursor.fetch_add(1)) {
      try {
        Graph g = graph6_decode(lines[i]);
        orders[i] = g.order();
        if (is_connected(g)) {
          const MetricProfile p = metric_profile(g);
          records[i].connected = true;
          records[i].radius = p.radius;
          records[i].center_size = static_cast<int>(p.center.size());
          records[i].matched =
              retain && retain(p.radius, static_cast<int>(p.center.size()));
        }
        if (records[i].matched) decoded[i] = std::move(g);
      } catch (const Error& e) {
        errors[worker] = RecordError{i + 1, e.what()};
        return;
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::optional<RecordError> first_error;
  for (const auto& e : errors)
    if (e && (!first_error || e->line < first_error->line)) first_error = e;
  if (first_error)
    fail(Errc::codec_error, "corpus record " + std::to_string(first_error->line) +
                                ": " + first_error->message);

  result.summary.order = orders[0];
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (orders[i] != result.summary.order)
      fail(Errc::mixed_orders,
           "corpus mixes orders " + std::to_string(result.summary.order) +
               " and " + std::to_string(orders[i]) + " (record " +
               std::to_string(i + 1) + ")");
    if (records[i].connected) {
      ++result.summary.connected_graphs;
      ++result.summary.table[records[i].radius][records[i].center_size];
    }
    if (records[i].matched) result.matches.push_back(std::move(*decoded[i]));
  }
  return result;
}

}  // namespace centers
