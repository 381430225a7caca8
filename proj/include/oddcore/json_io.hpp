#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oddcore/bipartization.hpp"
#include "oddcore/core_finder.hpp"
#include "oddcore/decompose.hpp"

namespace oddcore {

using nlohmann::json;

inline json to_json(const CoreCertificate& c) {
  json j;
  j["vertices"] = c.vertices;
  j["k"] = c.k;
  j["strong"] = c.strong;
  j["witnesses"] = json::array();
  for (const auto& w : c.witnesses) {
    j["witnesses"].push_back(
        {{"pair", {w.x, w.y}}, {"even", w.even_path}, {"odd", w.odd_path}});
  }
  return j;
}

inline CoreCertificate core_certificate_from_json(const json& j) {
  CoreCertificate c;
  c.vertices = j.at("vertices").get<std::vector<int>>();
  c.k = j.at("k").get<int>();
  c.strong = j.at("strong").get<bool>();
  for (const auto& w : j.at("witnesses")) {
    CoreCertificate::PairPaths p;
    auto pair = w.at("pair").get<std::vector<int>>();
    if (pair.size() != 2) throw std::invalid_argument("pair must have 2 entries");
    p.x = pair[0];
    p.y = pair[1];
    p.even_path = w.at("even").get<std::vector<int>>();
    p.odd_path = w.at("odd").get<std::vector<int>>();
    c.witnesses.push_back(std::move(p));
  }
  return c;
}

inline json to_json(const DiagnosticFailure& d) {
  return json{{"stage", d.stage}, {"message", d.message}, {"witness", d.witness}};
}

inline json to_json(const SuspensionDecomposition& d) {
  json j;
  j["base"] = {{"V1", d.side1}, {"V2", d.side2}};
  j["suspensions"] = json::array();
  for (const auto& s : d.suspensions) {
    j["suspensions"].push_back(
        {{"vertices", s.vertices}, {"anchor", s.anchor}, {"shared", s.shared}});
  }
  j["outside_count"] = d.outside_count;
  j["equality"] = d.equality;
  j["bounds"] = {{"d2_upper", d.d2_upper}, {"gamma2_upper", d.gamma2_upper}};
  j["diagnostics"] = json::array();
  return j;
}

inline SuspensionDecomposition decomposition_from_json(const json& j) {
  SuspensionDecomposition d;
  d.side1 = j.at("base").at("V1").get<std::vector<int>>();
  d.side2 = j.at("base").at("V2").get<std::vector<int>>();
  for (const auto& s : j.at("suspensions")) {
    Suspension sp;
    sp.vertices = s.at("vertices").get<std::vector<int>>();
    sp.anchor = s.at("anchor").get<int>();
    sp.shared = s.at("shared").get<bool>();
    d.suspensions.push_back(std::move(sp));
  }
  d.outside_count = j.at("outside_count").get<int>();
  d.equality = j.at("equality").get<bool>();
  d.d2_upper = j.at("bounds").at("d2_upper").get<int>();
  d.gamma2_upper = j.at("bounds").at("gamma2_upper").get<long long>();
  return d;
}

inline json to_json(const SolverResult& r) {
  json j;
  j["value"] = r.value;
  if (!r.vertices.empty() || r.edges.empty()) {
    j["witness"] = r.vertices;
  } else {
    j["witness"] = json::array();
    for (const auto& e : r.edges) j["witness"].push_back({e.first, e.second});
  }
  j["residue_coloring"] = r.residue_coloring;
  return j;
}

}  // namespace oddcore
