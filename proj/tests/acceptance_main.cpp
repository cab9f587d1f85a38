// acceptance_main.cpp — end-to-end acceptance suite. Runs every criterion
// and prints one PASS/FAIL line each; exits nonzero if any criterion fails.
//
// Usage: acceptance_tests [--only K] [--corpus FILE]
//   --only K      run a single criterion
//   --corpus F    complete connected order-9 graph6 catalog, enabling the
//                 corpus-backed uniqueness criterion (skipped otherwise)
//
// Needs CENTERS_CLI pointing at the centers binary.
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "centers/codec.hpp"
#include "centers/constructions.hpp"
#include "centers/enumerate.hpp"
#include "centers/isomorphism.hpp"
#include "centers/lemmas.hpp"
#include "centers/metrics.hpp"
#include "centers/omega.hpp"
#include "centers/ratio.hpp"
#include "centers/reduction.hpp"

#include "oracles.hpp"
#include "subprocess.hpp"

using namespace centers;
using nlohmann::json;

namespace {

struct Failure {
  std::string detail;
};

void expect(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

std::string str(std::int64_t v) { return std::to_string(v); }

std::vector<Witness> full_sweep() {
  std::vector<Witness> out;
  for (int n = 3; n <= 40; ++n)
    for (int r = 1; 2 * r <= n; ++r)
      for (const int s : omega_set(n, r)) out.push_back(witness(n, r, s));
  return out;
}

// 1. The headline query: omega --n 14 --r 6 prints exactly the nine values.
void abstract_headline() {
  const auto result = subprocess::run("omega --n 14 --r 6");
  expect(result.exit_code == 0, "exit " + str(result.exit_code));
  expect(result.output == "[1,2,3,4,9,10,11,12,14]\n",
         "got \"" + result.output + "\"");
}

// 2. Every feasible (n, r, s) with n <= 40 is realized and validates.
void construction_sweep() {
  std::size_t count = 0;
  for (int n = 3; n <= 40; ++n)
    for (int r = 1; 2 * r <= n; ++r)
      for (const int s : omega_set(n, r)) {
        const Witness w = witness(n, r, s);
        const auto v = validate_witness(w.graph, n, r, s);
        expect(v.all_pass, "n=" + str(n) + " r=" + str(r) + " s=" + str(s) +
                               " failed validation");
        ++count;
      }
  expect(count > 8000, "sweep unexpectedly small: " + str(count));
}

// 3. The five pinned family instances validate with their exact parameters.
void figure_parameters() {
  const std::vector<std::pair<Graph, std::array<int, 3>>> cases{
      {g1(14, 4, 5), {14, 4, 5}},   {g2(15, 4, 3), {15, 4, 3}},
      {g3(15, 4, 2), {15, 4, 2}},   {g4(15, 4, 11), {15, 4, 11}},
      {g5(12, 4), {12, 4, 12}},
  };
  for (const auto& [graph, nrs] : cases) {
    const auto v = validate_witness(graph, nrs[0], nrs[1], nrs[2]);
    expect(v.all_pass, "family instance (" + str(nrs[0]) + "," + str(nrs[1]) +
                           "," + str(nrs[2]) + ") failed");
  }
}

// 4. Exhaustive agreement with the closed form for n = 3..7.
void exhaustive_small_orders() {
  for (int n = 3; n <= 7; ++n) {
    const auto result = subprocess::run("verify --n " + str(n));
    expect(result.exit_code == 0,
           "verify --n " + str(n) + " exited " + str(result.exit_code));
  }
  const auto empirical = empirical_omega(7);
  expect(empirical.at(3) == std::set<int>{1, 2, 3, 5, 7},
         "order-7 radius-3 center sizes wrong");
  expect(empirical.at(3).count(4) == 0 && empirical.at(3).count(6) == 0,
         "gap values 4 or 6 observed at order 7");
}

// 5. Exhaustive agreement at n = 8 (the heavy tier; ~2^28 graphs).
void exhaustive_order_eight() {
  const auto result = subprocess::run("verify --n 8");
  expect(result.exit_code == 0, "verify --n 8 exited " + str(result.exit_code));
  const auto parsed = json::parse(result.output);
  expect(parsed["matches_formula"] == true, "formula mismatch reported");
  expect(parsed["table"]["4"]["center_sizes"] == json::array({2, 8}),
         "radius-4 center sizes at order 8 are not {2, 8}");
}

// 6. Order 7, radius 3, center size 5 has one realization up to
// isomorphism, with 2520 labeled copies (cross-checked against a
// brute-force orbit count).
void uniqueness_order_seven() {
  expect(oracles::labeled_orbit_size(lollipop(7, 6)) == 2520,
         "orbit oracle disagrees with 7!/2");
  const auto result = subprocess::run("unique --n 7 --r 3 --s 5");
  expect(result.exit_code == 0, "exit " + str(result.exit_code));
  const auto parsed = json::parse(result.output);
  expect(parsed["reference"] == graph6_encode(lollipop(7, 6)),
         "reference is not the expected lollipop");
  expect(parsed["report"]["is_unique"] == true, "not unique");
  expect(parsed["report"]["match_count"] == 2520,
         "match_count " + parsed["report"]["match_count"].dump());
}

// 7. Same uniqueness statement at order 9 against an external catalog.
void uniqueness_order_nine(const std::string& corpus) {
  const auto result = subprocess::run("unique --n 9 --r 4 --s 7 --corpus " +
                                      corpus);
  expect(result.exit_code == 0, "exit " + str(result.exit_code));
  const auto parsed = json::parse(result.output);
  expect(parsed["report"]["is_unique"] == true, "not unique");
  expect(parsed["reference"] == graph6_encode(lollipop(9, 8)),
         "reference is not the expected lollipop");
}

// 8. Both structural property scans are violation-free through order 7.
void property_scans() {
  for (const std::string check : {"induced-path", "geodesic-cycle"}) {
    const auto result =
        subprocess::run("lemmas --check " + check + " --n 7");
    expect(result.exit_code == 0,
           check + " exited " + str(result.exit_code));
    std::istringstream lines(result.output);
    std::string line;
    while (std::getline(lines, line)) {
      const auto rec = json::parse(line);
      expect(rec["violations"].empty(),
             check + " found violations at order " + rec["n"].dump());
    }
  }
}

// 9. Exact central ratios for every a/b with 1 <= a <= b <= 12.
void ratio_grid() {
  for (int b = 1; b <= 12; ++b)
    for (int a = 1; a <= b; ++a) {
      const Graph g = ratio_witness(a, b);
      const auto p = metric_profile(g);
      expect(p.central_ratio == make_rational(a, b),
             "ratio " + str(a) + "/" + str(b) + " mismatched");
    }
}

// 10. The edge-deletion reduction behaves across every sweep witness that
// carries a length-2r chordless cycle on labels 0..2r-1.
void reduction_sweep() {
  std::size_t reduced_count = 0;
  for (const Witness& w : full_sweep()) {
    bool has_cycle = false;
    bool expect_identity = false;
    switch (w.recipe.family) {
      case WitnessCase::g2_lollipop:
        has_cycle = true;
        expect_identity = true;  // a lollipop's leaving edge is a bridge
        break;
      case WitnessCase::g2_broom_on_cycle:
      case WitnessCase::g3_path:
      case WitnessCase::g3_broom:
      case WitnessCase::g4:
      case WitnessCase::g5:
        has_cycle = true;
        break;
      case WitnessCase::half_cycle:
        has_cycle = true;
        expect_identity = true;  // nothing outside the cycle
        break;
      default:
        break;
    }
    if (!has_cycle) continue;
    const int r = w.recipe.r;
    std::vector<int> cycle(2 * r);
    std::iota(cycle.begin(), cycle.end(), 0);
    const auto [reduced, report] = reduce_to_bridges(w.graph, cycle);
    const std::string where = " (n=" + str(w.recipe.n) + " r=" + str(r) +
                              " s=" + str(w.recipe.s) + ")";
    for (int i = 0; i < 2 * r; ++i)
      expect(reduced.adjacent(cycle[i], cycle[(i + 1) % (2 * r)]),
             "cycle edge deleted" + where);
    for (const auto& [u, v] : report.cut_edges)
      expect(oracles::is_bridge_oracle(reduced, u, v),
             "leaving edge is not a bridge" + where);
    expect(metric_profile(reduced).radius >= r, "radius decreased" + where);
    if (expect_identity)
      expect(reduced == w.graph, "reduction not the identity" + where);
    ++reduced_count;
  }
  expect(reduced_count > 1000, "too few reducible witnesses: " +
                                   str(reduced_count));
}

// 11. graph6 round-trips: fixed vectors, every sweep witness, and 10^4
// random graphs with n <= 62.
void codec_roundtrip() {
  expect(graph6_encode(empty_graph(1)) == "@", "K_1 vector");
  expect(graph6_encode(complete_graph(3)) == "Bw", "K_3 vector");
  expect(graph6_decode("@") == empty_graph(1), "K_1 decode");
  expect(graph6_decode("Bw") == complete_graph(3), "K_3 decode");
  for (const Witness& w : full_sweep())
    expect(graph6_decode(graph6_encode(w.graph)) == w.graph,
           "witness round trip failed at n=" + str(w.recipe.n));
  std::mt19937_64 rng(20250809);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 62);
    const double density = (trial % 11) / 10.0;
    const Graph g = oracles::random_graph(rng, n, density);
    expect(graph6_decode(graph6_encode(g)) == g, "random round trip failed");
  }
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::string corpus;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
    else if (arg == "--corpus" && i + 1 < argc) corpus = argv[++i];
    else {
      std::cerr << "usage: acceptance_tests [--only K] [--corpus FILE]\n";
      return 2;
    }
  }

  struct Criterion {
    int id;
    std::string name;
    std::function<void()> run;
    bool skip;
    std::string skip_reason;
    Criterion(int id_, std::string name_, std::function<void()> run_,
              bool skip_ = false, std::string reason = "")
        : id(id_), name(std::move(name_)), run(std::move(run_)), skip(skip_),
          skip_reason(std::move(reason)) {}
  };
  const std::vector<Criterion> criteria{
      {1, "omega-headline-14-6", abstract_headline},
      {2, "construction-sweep-n3-40", construction_sweep},
      {3, "family-instance-parameters", figure_parameters},
      {4, "exhaustive-orders-3-7", exhaustive_small_orders},
      {5, "exhaustive-order-8", exhaustive_order_eight},
      {6, "uniqueness-7-3-5", uniqueness_order_seven},
      {7, "uniqueness-9-4-7-corpus",
       [&corpus] { uniqueness_order_nine(corpus); }, corpus.empty(),
       "needs --corpus with the complete connected order-9 catalog"},
      {8, "property-scans-n7", property_scans},
      {9, "ratio-grid-b12", ratio_grid},
      {10, "reduction-sweep", reduction_sweep},
      {11, "codec-roundtrip", codec_roundtrip},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    if (only != 0 && criterion.id != only) continue;
    if (criterion.skip) {
      std::cout << "SKIP " << criterion.id << " " << criterion.name << " ("
                << criterion.skip_reason << ")\n";
      continue;
    }
    try {
      criterion.run();
      std::cout << "PASS " << criterion.id << " " << criterion.name << "\n";
    } catch (const Failure& f) {
      std::cout << "FAIL " << criterion.id << " " << criterion.name << ": "
                << f.detail << "\n";
      ++failures;
    } catch (const std::exception& e) {
      std::cout << "FAIL " << criterion.id << " " << criterion.name << ": "
                << e.what() << "\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
