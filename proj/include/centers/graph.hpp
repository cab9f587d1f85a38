// graph.hpp — immutable finite simple graph on dense labels 0..n-1.
//
// Adjacency is stored row-wise as fixed-width bit vectors so that BFS
// frontier expansion and neighborhood unions run word-parallel. Values are
// immutable after construction and safe to share across threads.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace centers {

enum class Errc {
  loop_edge,
  vertex_out_of_range,
  duplicate_edge,
  cycle_too_short,
  bad_parameters,
  infeasible_target,
  disconnected,
  order_too_large,
  codec_error,
  mixed_orders,
  not_induced_cycle,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::loop_edge: return "LoopEdge";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::cycle_too_short: return "CycleTooShort";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::infeasible_target: return "InfeasibleTarget";
    case Errc::disconnected: return "Disconnected";
    case Errc::order_too_large: return "OrderTooLarge";
    case Errc::codec_error: return "CodecError";
    case Errc::mixed_orders: return "MixedOrders";
    case Errc::not_induced_cycle: return "NotInducedCycle";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

class GraphBuilder;

class Graph {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;
  // Cap for general operations; enumeration and isomorphism have much
  // lower caps of their own.
  static constexpr int kMaxOrder = 4096;

  int order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  int words_per_row() const noexcept { return words_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return bit(u, v);
  }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(word_at(v, w));
    return d;
  }

  std::span<const Word> row(int v) const {
    check_vertex(v);
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  template <class Fn>
  void for_each_neighbor(int v, Fn&& fn) const {
    check_vertex(v);
    for (int w = 0; w < words_; ++w) {
      Word word = word_at(v, w);
      while (word != 0) {
        fn(w * kWordBits + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }

  // Visits edges as (u, v) with u < v, in lexicographic order.
  template <class Fn>
  void for_each_edge(Fn&& fn) const {
    for (int u = 0; u < order_; ++u) {
      for_each_neighbor(u, [&](int v) {
        if (u < v) fn(u, v);
      });
    }
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for_each_edge([&](int u, int v) { out.emplace_back(u, v); });
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  friend class GraphBuilder;

  explicit Graph(int order)
      : order_(order),
        words_((order + kWordBits - 1) / kWordBits),
        bits_(static_cast<std::size_t>(order) * words_, 0) {}

  void check_vertex(int v) const {
    if (v < 0 || v >= order_)
      fail(Errc::vertex_out_of_range,
           "vertex " + std::to_string(v) + " not in [0, " +
               std::to_string(order_) + ")");
  }

  Word word_at(int v, int w) const {
    return bits_[static_cast<std::size_t>(v) * words_ + w];
  }

  bool bit(int u, int v) const {
    return (word_at(u, v / kWordBits) >> (v % kWordBits)) & 1u;
  }

  void set_bit(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] |=
        Word{1} << (v % kWordBits);
  }

  int order_;
  int words_;
  std::vector<Word> bits_;
  std::size_t edge_count_ = 0;
};

// Mutable staging area for Graph values; the only way to make one.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order) : graph_(validated_order(order)) {}

  int order() const noexcept { return graph_.order(); }

  bool adjacent(int u, int v) const { return graph_.adjacent(u, v); }

  void add_edge(int u, int v) {
    if (!try_add(u, v))
      fail(Errc::duplicate_edge,
           "edge (" + std::to_string(u) + ", " + std::to_string(v) +
               ") added twice");
  }

  // Union semantics: ignores edges already present. Returns true if added.
  bool add_edge_if_absent(int u, int v) { return try_add(u, v); }

  Graph build() && { return std::move(graph_); }

 private:
  static int validated_order(int order) {
    if (order < 1) fail(Errc::bad_parameters, "graph order must be positive");
    if (order > Graph::kMaxOrder)
      fail(Errc::order_too_large,
           "order " + std::to_string(order) + " exceeds cap " +
               std::to_string(Graph::kMaxOrder));
    return order;
  }

  bool try_add(int u, int v) {
    graph_.check_vertex(u);
    graph_.check_vertex(v);
    if (u == v)
      fail(Errc::loop_edge, "loop at vertex " + std::to_string(u));
    if (graph_.bit(u, v)) return false;
    graph_.set_bit(u, v);
    graph_.set_bit(v, u);
    ++graph_.edge_count_;
    return true;
  }

  Graph graph_;
};

inline Graph build_graph(int order,
                         std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph build_graph(int order,
                         std::initializer_list<std::pair<int, int>> edges) {
  return build_graph(order, std::span<const std::pair<int, int>>(
                                edges.begin(), edges.size()));
}

inline Graph empty_graph(int t) {
  return std::move(GraphBuilder(t)).build();
}

inline Graph path_graph(int t) {
  GraphBuilder b(t);
  for (int i = 0; i + 1 < t; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

inline Graph cycle_graph(int t) {
  if (t < 3)
    fail(Errc::cycle_too_short,
         "cycle needs at least 3 vertices, got " + std::to_string(t));
  GraphBuilder b(t);
  for (int i = 0; i < t; ++i) b.add_edge(i, (i + 1) % t);
  return std::move(b).build();
}

inline Graph complete_graph(int t) {
  GraphBuilder b(t);
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < t; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

enum class StandardKind { path, cycle, complete, empty };

inline Graph standard(StandardKind kind, int t) {
  switch (kind) {
    case StandardKind::path: return path_graph(t);
    case StandardKind::cycle: return cycle_graph(t);
    case StandardKind::complete: return complete_graph(t);
    case StandardKind::empty: return empty_graph(t);
  }
  fail(Errc::bad_parameters, "unknown standard graph kind");
}

// Disjoint copies of g (labels 0..|g|-1) and h (labels |g|..) plus all
// cross edges.
inline Graph join(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  GraphBuilder b(n);
  g.for_each_edge([&](int u, int v) { b.add_edge(u, v); });
  const int shift = g.order();
  h.for_each_edge([&](int u, int v) { b.add_edge(shift + u, shift + v); });
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) b.add_edge(u, shift + v);
  return std::move(b).build();
}

// Glues h onto g by merging h's vertex v with g's vertex u. The merged
// vertex keeps label u; the remaining h vertices are relabeled after g's.
inline Graph identify(const Graph& g, int u, const Graph& h, int v) {
  if (u < 0 || u >= g.order())
    fail(Errc::vertex_out_of_range,
         "identify: vertex " + std::to_string(u) + " not in first graph");
  if (v < 0 || v >= h.order())
    fail(Errc::vertex_out_of_range,
         "identify: vertex " + std::to_string(v) + " not in second graph");
  const int n = g.order() + h.order() - 1;
  GraphBuilder b(n);
  g.for_each_edge([&](int x, int y) { b.add_edge_if_absent(x, y); });
  auto relabel = [&](int w) {
    if (w == v) return u;
    return g.order() + (w < v ? w : w - 1);
  };
  h.for_each_edge(
      [&](int x, int y) { b.add_edge_if_absent(relabel(x), relabel(y)); });
  return std::move(b).build();
}

inline bool is_connected(const Graph& g) {
  const int n = g.order();
  const int words = g.words_per_row();
  std::vector<Graph::Word> seen(words, 0), frontier(words, 0),
      next(words, 0);
  seen[0] = frontier[0] = 1;
  int reached = 1;
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
    bool advanced = false;
    for (int w = 0; w < words; ++w) {
      next[w] &= ~seen[w];
      seen[w] |= next[w];
      const int added = std::popcount(next[w]);
      if (added != 0) {
        advanced = true;
        reached += added;
      }
    }
    if (!advanced) break;
    frontier.swap(next);
  }
  return reached == n;
}

}  // namespace centers
