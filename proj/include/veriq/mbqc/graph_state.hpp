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

#ifndef VERIQ_MBQC_GRAPH_STATE_HPP
#define VERIQ_MBQC_GRAPH_STATE_HPP

#include <vector>

#include "veriq/mbqc/graph.hpp"
#include "veriq/pauli/pauli_operator.hpp"
#include "veriq/qsim/gates.hpp"

namespace veriq {

inline constexpr int kMaxGraphStateVertices = 16;

/// One stabilizer generator per vertex: X on v, Z on every neighbor.
inline std::vector<PauliOperator> stabilizer_generators(const Graph& g) {
  std::vector<PauliOperator> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::uint64_t x = std::uint64_t{1} << v;
    std::uint64_t z = 0;
    for (int w : g.neighbors(v)) z |= std::uint64_t{1} << w;
    out.push_back(PauliOperator(g.num_vertices(), x, z));
  }
  return out;
}

/// Graph plus its materialized state vector.
struct GraphState {
  Graph graph;
  StateVector state;
};

/// |+>^n entangled by CZ along every edge. Optionally override per-vertex
/// preparations (inputs, rotated preparations, dummies).
inline GraphState build_graph_state(const Graph& g,
                                    const std::vector<StateVector>* preparations = nullptr) {
  require(g.num_vertices() >= 1 && g.num_vertices() <= kMaxGraphStateVertices,
          "build_graph_state: vertex count exceeds cap");
  StateVector s;  // scalar; tensoring builds the register in vertex order
  for (int v = 0; v < g.num_vertices(); ++v) {
    StateVector q = preparations ? (*preparations)[v] : StateVector::plus_theta(Angle(0));
    require(q.num_qubits() == 1, "build_graph_state: preparations must be single qubits");
    s = s.tensor(q);
  }
  for (auto [a, b] : g.edges()) s = apply_unitary(s, gates::CZ(), {a, b});
  return {g, std::move(s)};
}

/// True iff every K_v has expectation +1 within tol.
inline bool graph_state_check(const GraphState& gs, double tol = 1e-9) {
  for (const auto& k : stabilizer_generators(gs.graph))
    if (std::abs(k.expectation(gs.state) - cx(1, 0)) > tol) return false;
  return true;
}

}  // namespace veriq

#endif  // VERIQ_MBQC_GRAPH_STATE_HPP
