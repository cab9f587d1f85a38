// centers — command-line surface for the graph-center toolkit.
//
// Machine-readable results go to standard output as JSON; diagnostics go
// to standard error. Exit codes: 0 success, 1 a verification found a
// mismatch (the mathematics disagreed), 2 usage or input errors.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "centers/codec.hpp"
#include "centers/constructions.hpp"
#include "centers/enumerate.hpp"
#include "centers/isomorphism.hpp"
#include "centers/lemmas.hpp"
#include "centers/metrics.hpp"
#include "centers/omega.hpp"
#include "centers/ratio.hpp"
#include "centers/reduction.hpp"
#include "centers/reports.hpp"

namespace {

using namespace centers;

std::string read_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_stream(std::cin);
  std::ifstream file(path);
  if (!file) fail(Errc::codec_error, "cannot open " + path);
  return read_stream(file);
}

bool looks_like_edge_list(const std::string& text) {
  for (const char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c >= '0' && c <= '9';
  }
  return false;
}

// One graph per nonblank line for graph6 input; the whole stream for an
// edge list.
std::vector<Graph> load_graphs(const std::string& path,
                               const std::string& format) {
  const std::string text = read_input(path);
  const bool edges = format == "edges" ||
                     (format == "auto" && looks_like_edge_list(text));
  if (edges) return {edge_list_parse(text)};
  std::vector<Graph> graphs;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(graph6_decode(line));
  }
  if (graphs.empty()) fail(Errc::codec_error, "no graph records in input");
  return graphs;
}

std::vector<int> parse_cycle_list(const std::string& text) {
  std::vector<int> cycle;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ','))
    if (!token.empty()) cycle.push_back(std::stoi(token));
  return cycle;
}

int run_omega(int n, int r) {
  std::cout << Json(omega_set(n, r)).dump() << "\n";
  return 0;
}

int run_witness(int n, int r, int s, const std::string& format) {
  const Witness w = witness(n, r, s);
  if (format == "graph6") {
    std::cout << graph6_encode(w.graph) << "\n";
  } else if (format == "edges") {
    std::cout << edge_list_export(w.graph);
  } else if (format == "dot") {
    const auto center = metric_profile(w.graph).center;
    std::cout << dot_export(w.graph, center);
  } else {
    Json j;
    j["n"] = n;
    j["r"] = r;
    j["s"] = s;
    j["recipe"] = to_json(w.recipe);
    j["graph6"] = graph6_encode(w.graph);
    j["validation"] = to_json(validate_witness(w.graph, n, r, s));
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int run_analyze(const std::string& path, const std::string& format) {
  const auto graphs = load_graphs(path, format);
  for (const Graph& g : graphs) {
    Json j = to_json(metric_profile(g));
    j["graph6"] = graph6_encode(g);
    if (graphs.size() == 1)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << j.dump() << "\n";
  }
  return 0;
}

int run_verify(int n, int max_n, int jobs) {
  if (max_n < n)
    fail(Errc::bad_parameters, "--max-n must be at least --n");
  bool all_match = true;
  for (int order = n; order <= max_n; ++order) {
    if (order > kEnumerationMaxOrder)
      fail(Errc::order_too_large,
           "exhaustive verification covers n <= 8; larger orders need an "
           "external graph6 catalog (see `unique --corpus`)");
    EnumerationOptions opt;
    opt.jobs = jobs;
    const auto scan = enumerate_labeled(order, opt);
    const auto empirical = scan.summary.center_sizes_by_radius();
    std::map<int, std::set<int>> formula;
    for (int r = 1; 2 * r <= order; ++r) {
      const auto set = omega_set(order, r);
      formula[r] = std::set<int>(set.begin(), set.end());
    }
    const bool match = empirical == formula;
    all_match = all_match && match;
    Json j = to_json(scan.summary);
    Json formula_json = Json::object();
    for (const auto& [r, sizes] : formula)
      formula_json[std::to_string(r)] =
          std::vector<int>(sizes.begin(), sizes.end());
    j["formula"] = formula_json;
    j["matches_formula"] = match;
    std::cout << (n == max_n ? j.dump(2) : j.dump()) << "\n";
    if (!match)
      std::cerr << "order " << order
                << ": observed center sizes disagree with the formula\n";
  }
  return all_match ? 0 : 1;
}

int run_unique(int n, int r, int s, const std::string& corpus_path,
               int jobs) {
  const Witness reference = witness(n, r, s);
  UniquenessReport report;
  std::string source;
  if (!corpus_path.empty()) {
    std::ifstream corpus(corpus_path);
    if (!corpus) fail(Errc::codec_error, "cannot open " + corpus_path);
    report = unique_in_corpus(corpus, n, r, s, reference.graph, jobs);
    source = "corpus";
  } else {
    if (n > kEnumerationMaxOrder)
      fail(Errc::order_too_large,
           "built-in exhaustive scan covers n <= 8; pass the complete "
           "connected catalog for this order via --corpus");
    report = unique_up_to_iso(n, r, s, reference.graph, jobs);
    source = "exhaustive-labeled";
  }
  Json j;
  j["n"] = n;
  j["r"] = r;
  j["s"] = s;
  j["reference"] = graph6_encode(reference.graph);
  j["reference_case"] = std::string(to_string(reference.recipe.family));
  j["source"] = source;
  j["report"] = to_json(report);
  std::cout << j.dump(2) << "\n";
  if (!report.is_unique)
    std::cerr << "found a non-isomorphic graph with the same parameters\n";
  return report.is_unique ? 0 : 1;
}

int run_lemmas(const std::string& check, int max_n, int jobs) {
  if (max_n > kEnumerationMaxOrder)
    fail(Errc::order_too_large,
         "exhaustive property scans cover n <= 8, got " +
             std::to_string(max_n));
  bool ok = true;
  for (int order = 2; order <= max_n; ++order) {
    const PropertyScanResult result =
        check == "induced-path" ? scan_induced_path_property(order, jobs)
                                : scan_geodesic_cycle_property(order, jobs);
    Json j = to_json(result);
    j["check"] = check;
    Json bad = Json::array();
    for (const auto mask : result.violations)
      bad.push_back(graph6_encode(graph_from_edge_mask(order, mask)));
    j["violating_graph6"] = bad;
    std::cout << j.dump() << "\n";
    ok = ok && result.violations.empty();
  }
  if (!ok) std::cerr << "property violated; see violating_graph6\n";
  return ok ? 0 : 1;
}

int run_ratio(int a, int b) {
  const Graph g = ratio_witness(a, b);
  const MetricProfile p = metric_profile(g);
  Json j;
  j["a"] = a;
  j["b"] = b;
  j["order"] = p.order;
  j["center_size"] = p.center.size();
  j["ratio"] = to_json(p.central_ratio);
  j["graph6"] = graph6_encode(g);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_reduce(const std::string& path, const std::string& format,
               const std::string& cycle_text) {
  const auto graphs = load_graphs(path, format);
  if (graphs.size() != 1)
    fail(Errc::bad_parameters, "reduce expects exactly one input graph");
  const auto cycle = parse_cycle_list(cycle_text);
  const auto [reduced, report] = reduce_to_bridges(graphs[0], cycle);
  Json j;
  j["input"] = graph6_encode(graphs[0]);
  j["reduced"] = graph6_encode(reduced);
  j["report"] = to_json(report);
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "centers: eccentricity profiles, feasible center cardinalities, "
      "witness constructions and exhaustive small-graph verification"};
  app.require_subcommand(1);

  int n = 0, r = 0, s = 0, a = 0, b = 0, jobs = 0;
  int max_n = 0;
  std::string format = "graph6";
  std::string input_format = "auto";
  std::string path;
  std::string corpus_path;
  std::string check;
  std::string cycle_text;

  auto* omega_cmd =
      app.add_subcommand("omega", "feasible center sizes for (n, r)");
  omega_cmd->add_option("--n", n, "graph order")->required();
  omega_cmd->add_option("--r", r, "radius")->required();

  auto* witness_cmd = app.add_subcommand(
      "witness", "construct a graph with the given order, radius and "
                 "center size");
  witness_cmd->add_option("--n", n, "graph order")->required();
  witness_cmd->add_option("--r", r, "radius")->required();
  witness_cmd->add_option("--s", s, "center cardinality")->required();
  witness_cmd->add_option("--format", format, "graph6|dot|edges|json")
      ->check(CLI::IsMember({"graph6", "dot", "edges", "json"}));

  auto* analyze_cmd = app.add_subcommand(
      "analyze", "metric profile of graphs read from a file or stdin");
  analyze_cmd->add_option("input", path, "input file (default stdin)");
  analyze_cmd->add_option("--format", input_format, "auto|graph6|edges")
      ->check(CLI::IsMember({"auto", "graph6", "edges"}));

  auto* verify_cmd = app.add_subcommand(
      "verify", "exhaustively compare observed center sizes against the "
                "closed form");
  verify_cmd->add_option("--n", n, "order to scan")->required();
  verify_cmd->add_option("--max-n", max_n, "scan a range n..max-n");
  verify_cmd->add_option("--jobs", jobs, "worker threads (default: all)");

  auto* unique_cmd = app.add_subcommand(
      "unique", "check that one graph realizes (n, r, s) up to isomorphism");
  unique_cmd->add_option("--n", n, "graph order")->required();
  unique_cmd->add_option("--r", r, "radius")->required();
  unique_cmd->add_option("--s", s, "center cardinality")->required();
  unique_cmd->add_option("--corpus", corpus_path,
                         "graph6 catalog file (one record per line)");
  unique_cmd->add_option("--jobs", jobs, "worker threads (default: all)");

  auto* lemmas_cmd = app.add_subcommand(
      "lemmas", "scan all connected graphs of order <= n for a structural "
                "property");
  lemmas_cmd->add_option("--check", check, "induced-path|geodesic-cycle")
      ->required()
      ->check(CLI::IsMember({"induced-path", "geodesic-cycle"}));
  lemmas_cmd->add_option("--n", n, "largest order to scan")->required();
  lemmas_cmd->add_option("--jobs", jobs, "worker threads (default: all)");

  auto* ratio_cmd = app.add_subcommand(
      "ratio", "construct a graph with central ratio a/b");
  ratio_cmd->add_option("--a", a, "numerator")->required();
  ratio_cmd->add_option("--b", b, "denominator")->required();

  auto* reduce_cmd = app.add_subcommand(
      "reduce", "delete replaceable edges until all edges leaving the given "
                "chordless cycle are bridges");
  reduce_cmd->add_option("input", path, "input file (default stdin)");
  reduce_cmd->add_option("--format", input_format, "auto|graph6|edges")
      ->check(CLI::IsMember({"auto", "graph6", "edges"}));
  reduce_cmd
      ->add_option("--cycle", cycle_text, "comma-separated cycle vertices")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*omega_cmd) return run_omega(n, r);
    if (*witness_cmd) return run_witness(n, r, s, format);
    if (*analyze_cmd) return run_analyze(path, input_format);
    if (*verify_cmd) return run_verify(n, max_n == 0 ? n : max_n, jobs);
    if (*unique_cmd) return run_unique(n, r, s, corpus_path, jobs);
    if (*lemmas_cmd) return run_lemmas(check, n, jobs);
    if (*ratio_cmd) return run_ratio(a, b);
    if (*reduce_cmd) return run_reduce(path, input_format, cycle_text);
  } catch (const centers::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
