// reports.hpp — JSON views of the library's report types. Field order is
// fixed (insertion order), integers are exact, rationals appear as
// {"num": ..., "den": ...}.
#pragma once

#include <string>

#include <json.hpp>

#include "centers/codec.hpp"
#include "centers/constructions.hpp"
#include "centers/enumerate.hpp"
#include "centers/graph.hpp"
#include "centers/isomorphism.hpp"
#include "centers/lemmas.hpp"
#include "centers/metrics.hpp"
#include "centers/reduction.hpp"

namespace centers {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) {
  return Json{{"num", r.num}, {"den", r.den}};
}

inline Json to_json(const MetricProfile& p) {
  Json j;
  j["order"] = p.order;
  j["radius"] = p.radius;
  j["diameter"] = p.diameter;
  j["center"] = p.center;
  j["periphery"] = p.periphery;
  j["central_ratio"] = to_json(p.central_ratio);
  j["self_centered"] = p.self_centered();
  j["eccentricities"] = p.eccentricities;
  return j;
}

inline Json to_json(const WitnessRecipe& r) {
  Json j;
  j["case"] = std::string(to_string(r.family));
  j["n"] = r.n;
  j["r"] = r.r;
  j["s"] = r.s;
  j["k"] = r.k;
  return j;
}

inline Json to_json(const WitnessValidation& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass}});
  }
  return Json{{"checks", checks}, {"all_pass", v.all_pass}};
}

inline Json to_json(const EnumerationSummary& s) {
  Json table = Json::object();
  for (const auto& [radius, sizes] : s.table) {
    Json counts = Json::object();
    Json attained = Json::array();
    for (const auto& [size, count] : sizes) {
      attained.push_back(size);
      counts[std::to_string(size)] = count;
    }
    table[std::to_string(radius)] =
        Json{{"center_sizes", attained}, {"counts", counts}};
  }
  return Json{{"n", s.order},
              {"total_graphs", s.total_graphs},
              {"connected_graphs", s.connected_graphs},
              {"table", table}};
}

inline Json to_json(const ReductionReport& r) {
  Json cut = Json::array();
  for (const auto& [u, v] : r.cut_edges) cut.push_back(Json::array({u, v}));
  Json removed = Json::array();
  for (const auto& [u, v] : r.removed_edges)
    removed.push_back(Json::array({u, v}));
  return Json{{"cycle", r.cycle},
              {"removed_edges", removed},
              {"cut_edges", cut},
              {"branches", r.branches},
              {"depths", r.depths},
              {"bound", r.bound}};
}

inline Json to_json(const UniquenessReport& r) {
  Json j;
  j["is_unique"] = r.is_unique;
  j["match_count"] = r.match_count;
  if (r.counterexample)
    j["counterexample"] = graph6_encode(*r.counterexample);
  return j;
}

inline Json to_json(const PropertyScanResult& r) {
  Json violations = Json::array();
  for (const auto mask : r.violations) violations.push_back(mask);
  return Json{{"n", r.order},
              {"connected_graphs", r.connected_graphs},
              {"checked", r.checked},
              {"vacuous", r.vacuous},
              {"violations", violations}};
}

template <class T>
std::string report_json(const T& value) {
  return to_json(value).dump(2);
}

}  // namespace centers
