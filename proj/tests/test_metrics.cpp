#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "centers/constructions.hpp"
#include "centers/graph.hpp"
#include "centers/metrics.hpp"

#include "oracles.hpp"

using namespace centers;

TEST_CASE("bfs_distances", "[metrics]") {
  REQUIRE(bfs_distances(cycle_graph(6), 0) ==
          std::vector<int>{0, 1, 2, 3, 2, 1});
  REQUIRE(bfs_distances(path_graph(4), 0) == std::vector<int>{0, 1, 2, 3});
  REQUIRE(bfs_distances(build_graph(4, {{0, 1}, {2, 3}}), 0) ==
          std::vector<int>{0, 1, kUnreachable, kUnreachable});
  REQUIRE_THROWS_AS(bfs_distances(path_graph(3), 5), Error);
}

TEST_CASE("metric_profile on fixed graphs", "[metrics]") {
  const auto p5 = metric_profile(path_graph(5));
  REQUIRE(p5.eccentricities == std::vector<int>{4, 3, 2, 3, 4});
  REQUIRE(p5.radius == 2);
  REQUIRE(p5.diameter == 4);
  REQUIRE(p5.center == std::vector<int>{2});
  REQUIRE(p5.periphery == std::vector<int>{0, 4});
  REQUIRE(p5.central_ratio == make_rational(1, 5));

  const auto c6 = metric_profile(cycle_graph(6));
  REQUIRE(c6.radius == 3);
  REQUIRE(c6.diameter == 3);
  REQUIRE(c6.self_centered());
  REQUIRE(c6.center.size() == 6);
  REQUIRE(c6.central_ratio == make_rational(1, 1));

  const auto lp = metric_profile(lollipop(14, 12));
  REQUIRE(lp.radius == 6);
  REQUIRE(lp.center.size() == 9);

  const auto k1 = metric_profile(empty_graph(1));
  REQUIRE(k1.radius == 0);
  REQUIRE(k1.diameter == 0);
  REQUIRE(k1.center == std::vector<int>{0});
}

TEST_CASE("metric_profile rejects disconnected graphs", "[metrics][errors]") {
  try {
    metric_profile(build_graph(4, {{0, 1}, {2, 3}}));
    FAIL("expected Disconnected");
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::disconnected);
  }
}

TEST_CASE("diametral_path is deterministic and tight", "[metrics]") {
  REQUIRE(diametral_path(path_graph(4)) == std::vector<int>{0, 1, 2, 3});
  REQUIRE(diametral_path(cycle_graph(5)) == std::vector<int>{0, 1, 2});
  REQUIRE(diametral_path(broom(10, 6)) ==
          std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  REQUIRE(diametral_path(empty_graph(1)) == std::vector<int>{0});
}

TEST_CASE("profile invariants on random connected graphs",
          "[metrics][property]") {
  std::mt19937_64 rng(20250809);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = oracles::random_connected_graph(rng, n, 0.35);
    const auto p = metric_profile(g);
    const auto naive = oracles::naive_profile(g);

    // the two BFS routes must agree vertex by vertex
    REQUIRE(p.eccentricities == naive.ecc);
    for (int v = 0; v < n; ++v)
      REQUIRE(bfs_distances(g, v) == oracles::naive_bfs(g, v));

    REQUIRE(p.radius == naive.radius);
    REQUIRE(p.diameter == naive.diameter);
    REQUIRE(p.center == naive.center);
    REQUIRE(p.periphery == naive.periphery);

    REQUIRE(p.radius <= p.diameter);
    REQUIRE(p.diameter <= 2 * p.radius);
    REQUIRE(2 * p.radius <= n);  // spanning-tree bound for connected graphs
    REQUIRE_FALSE(p.center.empty());
    REQUIRE(p.periphery.size() >= 2);  // n >= 2 here
    REQUIRE(p.self_centered() ==
            (p.center.size() == static_cast<std::size_t>(n)));

    // an eccentric vertex of a peripheral vertex is peripheral
    for (const int v : p.periphery) {
      const auto dist = bfs_distances(g, v);
      for (int u = 0; u < n; ++u)
        if (dist[u] == p.eccentricities[v])
          REQUIRE(p.eccentricities[u] == p.diameter);
    }

    // diametral path realizes the diameter as a shortest path
    const auto path = diametral_path(g);
    REQUIRE(static_cast<int>(path.size()) == p.diameter + 1);
    const auto from_start = bfs_distances(g, path.front());
    REQUIRE(from_start[path.back()] == p.diameter);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      REQUIRE(g.adjacent(path[i], path[i + 1]));
  }
}

TEST_CASE("rationals reduce exactly", "[metrics]") {
  REQUIRE(make_rational(12, 14) == make_rational(6, 7));
  REQUIRE(make_rational(0, 5) == make_rational(0, 9));
  REQUIRE(make_rational(7, 7) == Rational{1, 1});
  REQUIRE_THROWS_AS(make_rational(1, 0), Error);
}
