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

#ifndef VERIQ_MBQC_GRAPH_HPP
#define VERIQ_MBQC_GRAPH_HPP

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "veriq/core/types.hpp"

namespace veriq {

/// Simple undirected graph on vertices 0..n-1; no self-loops, no duplicates.
class Graph {
 public:
  explicit Graph(int num_vertices, std::vector<std::pair<int, int>> edge_list = {})
      : n_(num_vertices), adj_(num_vertices) {
    require(num_vertices >= 0, "Graph: negative vertex count");
    for (auto [a, b] : edge_list) add_edge(a, b);
  }

  void add_edge(int a, int b) {
    require(a != b, "Graph: self-loop");
    require(a >= 0 && a < n_ && b >= 0 && b < n_, "Graph: vertex out of range");
    auto e = std::minmax(a, b);
    require(!edges_.contains({e.first, e.second}), "Graph: duplicate edge");
    edges_.insert({e.first, e.second});
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }

  int num_vertices() const { return n_; }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int a, int b) const {
    auto e = std::minmax(a, b);
    return edges_.contains({e.first, e.second});
  }

  /// 2-coloring of a bipartite graph; color[v] in {0,1}. Throws if odd cycles.
  std::vector<int> two_coloring() const {
    std::vector<int> color(n_, -1);
    for (int start = 0; start < n_; ++start) {
      if (color[start] != -1) continue;
      color[start] = 0;
      std::vector<int> stack = {start};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v]) {
          if (color[w] == -1) {
            color[w] = 1 - color[v];
            stack.push_back(w);
          } else {
            require(color[w] != color[v], "two_coloring: graph is not bipartite");
          }
        }
      }
    }
    return color;
  }

 private:
  int n_;
  std::set<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace veriq

#endif  // VERIQ_MBQC_GRAPH_HPP
