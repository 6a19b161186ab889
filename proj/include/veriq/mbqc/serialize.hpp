// Copyright 2026 The veriq developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VERIQ_MBQC_SERIALIZE_HPP
#define VERIQ_MBQC_SERIALIZE_HPP

#include <json.hpp>

#include "veriq/mbqc/pattern.hpp"

namespace veriq {

using json = nlohmann::json;

inline json graph_to_json(const Graph& g) {
  json j;
  j["vertices"] = g.num_vertices();
  j["edges"] = json::array();
  for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j;
}

inline Graph graph_from_json(const json& j) {
  Graph g(j.at("vertices").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

inline json pattern_to_json(const MeasurementPattern& p) {
  json j;
  j["graph"] = graph_to_json(p.graph);
  j["order"] = p.order;
  j["outputs"] = p.outputs;
  json angles = json::object();
  for (const auto& [v, a] : p.angles) angles[std::to_string(v)] = a.units();
  j["angles_pi4"] = angles;
  auto deps = [](const std::map<int, std::vector<int>>& m) {
    json out = json::object();
    for (const auto& [v, ds] : m)
      if (!ds.empty()) out[std::to_string(v)] = ds;
    return out;
  };
  j["s_deps"] = deps(p.s_deps);
  j["r_deps"] = deps(p.r_deps);
  j["out_x_deps"] = deps(p.out_x_deps);
  j["out_z_deps"] = deps(p.out_z_deps);
  return j;
}

inline MeasurementPattern pattern_from_json(const json& j) {
  MeasurementPattern p;
  p.graph = graph_from_json(j.at("graph"));
  p.order = j.at("order").get<std::vector<int>>();
  p.outputs = j.at("outputs").get<std::vector<int>>();
  for (const auto& [k, v] : j.at("angles_pi4").items())
    p.angles[std::stoi(k)] = Angle(v.get<int>());
  auto deps = [](const json& src, std::map<int, std::vector<int>>& dst) {
    for (const auto& [k, v] : src.items()) dst[std::stoi(k)] = v.get<std::vector<int>>();
  };
  deps(j.at("s_deps"), p.s_deps);
  deps(j.at("r_deps"), p.r_deps);
  deps(j.at("out_x_deps"), p.out_x_deps);
  deps(j.at("out_z_deps"), p.out_z_deps);
  p.validate();
  return p;
}

}  // namespace veriq

#endif  // VERIQ_MBQC_SERIALIZE_HPP
