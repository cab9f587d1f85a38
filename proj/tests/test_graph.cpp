#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "centers/graph.hpp"
#include "centers/isomorphism.hpp"
#include "centers/metrics.hpp"

#include "oracles.hpp"

using namespace centers;

namespace {

// Full adjacency scan of the simple-graph invariants.
void check_simple_graph(const Graph& g) {
  std::size_t ones = 0;
  for (int u = 0; u < g.order(); ++u) {
    REQUIRE_FALSE(g.adjacent(u, u));
    for (int v = 0; v < g.order(); ++v) {
      REQUIRE(g.adjacent(u, v) == g.adjacent(v, u));
      if (g.adjacent(u, v)) ++ones;
    }
  }
  REQUIRE(g.edge_count() == ones / 2);
}

}  // namespace

TEST_CASE("build_graph constructs exactly the given edges", "[graph]") {
  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  REQUIRE(p3.order() == 3);
  REQUIRE(p3.edge_count() == 2);
  REQUIRE(p3.adjacent(0, 1));
  REQUIRE(p3.adjacent(1, 2));
  REQUIRE_FALSE(p3.adjacent(0, 2));
  check_simple_graph(p3);

  const Graph single = build_graph(1, {});
  REQUIRE(single.order() == 1);
  REQUIRE(single.edge_count() == 0);

  const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  REQUIRE(c4.edge_count() == 4);
  REQUIRE(c4 == cycle_graph(4));
}

TEST_CASE("build_graph rejects malformed edge lists", "[graph][errors]") {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc{};
  };
  REQUIRE(code([] { build_graph(3, {{1, 1}}); }) == Errc::loop_edge);
  REQUIRE(code([] { build_graph(3, {{0, 3}}); }) == Errc::vertex_out_of_range);
  REQUIRE(code([] { build_graph(3, {{0, -1}}); }) ==
          Errc::vertex_out_of_range);
  REQUIRE(code([] { build_graph(3, {{0, 1}, {1, 0}}); }) ==
          Errc::duplicate_edge);
  REQUIRE(code([] { build_graph(0, {}); }) == Errc::bad_parameters);
  REQUIRE(code([] { build_graph(4097, {}); }) == Errc::order_too_large);
}

TEST_CASE("standard families", "[graph]") {
  REQUIRE(path_graph(4).edge_count() == 3);
  REQUIRE(cycle_graph(3) == complete_graph(3));
  REQUIRE(complete_graph(5).edge_count() == 10);
  REQUIRE(empty_graph(4).edge_count() == 0);
  REQUIRE(standard(StandardKind::path, 4) == path_graph(4));
  REQUIRE(standard(StandardKind::cycle, 5) == cycle_graph(5));
  REQUIRE_THROWS_AS(cycle_graph(2), Error);
  try {
    cycle_graph(2);
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::cycle_too_short);
  }
}

TEST_CASE("join places both parts and all cross edges", "[graph]") {
  const Graph j = join(complete_graph(2), empty_graph(2));
  REQUIRE(j.order() == 4);
  REQUIRE(j.edge_count() == 5);  // 1 + 0 + 4
  REQUIRE(join(empty_graph(1), empty_graph(1)) == complete_graph(2));
  check_simple_graph(j);

  const Graph big = join(complete_graph(3), empty_graph(4));
  REQUIRE(big.edge_count() == 3 + 0 + 12);
  const auto p = metric_profile(big);
  REQUIRE(p.radius == 1);
  REQUIRE(p.center == std::vector<int>{0, 1, 2});
}

TEST_CASE("join is commutative up to isomorphism", "[graph][property]") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = oracles::random_graph(rng, 2 + trial % 4, 0.5);
    const auto h = oracles::random_graph(rng, 2 + (trial + 2) % 4, 0.4);
    REQUIRE(are_isomorphic(join(g, h), join(h, g)));
  }
}

TEST_CASE("identify merges one vertex and keeps the graph simple",
          "[graph]") {
  const Graph glued = identify(path_graph(3), 0, path_graph(3), 0);
  REQUIRE(glued.order() == 5);
  REQUIRE(are_isomorphic(glued, path_graph(5)));

  REQUIRE(identify(empty_graph(1), 0, empty_graph(1), 0) == empty_graph(1));

  REQUIRE_THROWS_AS(identify(path_graph(3), 3, path_graph(3), 0), Error);
}

TEST_CASE("identify never duplicates edges", "[graph][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracles::random_graph(rng, 3 + trial % 5, 0.5);
    const auto h = oracles::random_graph(rng, 3 + (trial + 1) % 5, 0.5);
    const int u = static_cast<int>(rng() % g.order());
    const int v = static_cast<int>(rng() % h.order());
    const Graph merged = identify(g, u, h, v);
    REQUIRE(merged.order() == g.order() + h.order() - 1);
    check_simple_graph(merged);
  }
}

TEST_CASE("is_connected", "[graph]") {
  REQUIRE(is_connected(cycle_graph(6)));
  REQUIRE_FALSE(is_connected(empty_graph(2)));
  REQUIRE_FALSE(is_connected(build_graph(4, {{0, 1}, {2, 3}})));
  REQUIRE(is_connected(empty_graph(1)));
}

TEST_CASE("is_connected agrees with the list-BFS oracle",
          "[graph][property]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracles::random_graph(rng, 2 + trial % 9, 0.25);
    REQUIRE(is_connected(g) == oracles::naive_connected(g));
  }
}
