#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "szw/checks.hpp"
#include "szw/graph6.hpp"
#include "szw/invariants.hpp"
#include "szw/scan.hpp"

namespace szw {

using Json = nlohmann::ordered_json;

inline Json to_json(const InvariantReport& r, const std::string& graph6) {
  Json j;
  j["graph6"] = graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["wiener"] = r.wiener;
  j["szeged"] = r.szeged;
  j["szeged_star_q4"] = r.szeged_star_q4;
  j["eta"] = r.eta;
  j["eta_star_q4"] = r.eta_star_q4;
  j["contribution"] = r.contribution;
  j["horizontal"] = r.horizontal;
  return j;
}

inline Json to_json(const CheckOutcome& o) {
  Json j;
  j["status"] = std::string(status_name(o.status));
  Json observed = Json::object();
  for (const auto& ob : o.observed) observed[ob.name] = ob.value;
  j["observed"] = observed;
  j["trace"] = o.trace;
  return j;
}

inline Json to_json(const CheckOutcome& o, CheckId check, const std::string& graph6) {
  Json j;
  j["graph6"] = graph6;
  j["check"] = std::string(check_name(check));
  const Json body = to_json(o);
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

inline CheckOutcome outcome_from_json(const Json& j) {
  CheckOutcome o;
  const auto s = j.at("status").get<std::string>();
  if (s == "pass") {
    o.status = CheckStatus::pass;
  } else if (s == "fail") {
    o.status = CheckStatus::fail;
  } else if (s == "not_applicable") {
    o.status = CheckStatus::not_applicable;
  } else {
    throw std::invalid_argument("unknown status '" + s + "'");
  }
  for (auto& [k, v] : j.at("observed").items()) o.observed.push_back({k, v.get<std::int64_t>()});
  o.trace = j.at("trace").get<std::vector<std::string>>();
  return o;
}

inline Json to_json(const ScanReport& r, bool include_wall_time = true) {
  Json j;
  j["check"] = r.check;
  j["stream_count"] = r.stream_count;
  j["filtered_out"] = r.filtered_out;
  j["examined"] = r.examined;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["not_applicable"] = r.not_applicable;
  j["skipped_lines"] = r.skipped_lines;
  j["min"] = r.min_value ? Json(*r.min_value) : Json(nullptr);
  j["max"] = r.max_value ? Json(*r.max_value) : Json(nullptr);
  Json hist = Json::object();
  for (auto [value, count] : r.histogram) hist[std::to_string(value)] = count;
  j["histogram"] = hist;
  Json ces = Json::array();
  for (const auto& ce : r.counterexamples) {
    Json c;
    c["graph6"] = ce.graph6;
    c["ordinal"] = ce.ordinal;
    const Json body = to_json(ce.outcome);
    for (auto& [k, v] : body.items()) c[k] = v;
    ces.push_back(c);
  }
  j["counterexamples"] = ces;
  if (include_wall_time) j["wall_seconds"] = r.wall_seconds;
  return j;
}

inline std::string csv_header() { return "graph6,check,status,eta,bound"; }

inline std::string csv_row(const CheckOutcome& o, CheckId check, const std::string& graph6) {
  std::ostringstream out;
  auto opt = [&](const char* name) {
    if (auto v = o.value(name)) out << *v;
  };
  out << graph6 << ',' << check_name(check) << ',' << status_name(o.status) << ',';
  opt("eta");
  out << ',';
  opt("bound");
  return out.str();
}

}  // namespace szw
