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

#ifndef VERIQ_MBQC_PATTERN_HPP
#define VERIQ_MBQC_PATTERN_HPP

#include <map>
#include <optional>
#include <vector>

#include "veriq/core/angle.hpp"
#include "veriq/core/rng.hpp"
#include "veriq/mbqc/graph.hpp"
#include "veriq/qsim/gates.hpp"
#include "veriq/qsim/measure.hpp"

namespace veriq {

/// Ordered, dependency-corrected measurement plan on a graph state.
///
/// Every non-output vertex is measured once, in `order`, in the XY basis at
/// the corrected angle (-1)^{s_v} phi_v + r_v*pi, where s_v (r_v) is the
/// parity of the outcomes of the vertex's s_dependencies (r_dependencies).
/// Corrections are folded into measurement angles and never applied as gates;
/// residual byproducts on output vertices are reported as dependency sets.
struct MeasurementPattern {
  Graph graph{0};
  std::vector<int> order;                      // measured vertices, temporal order
  std::map<int, Angle> angles;                 // base angle phi_v per measured vertex
  std::map<int, std::vector<int>> s_deps;      // sign-flip dependencies
  std::map<int, std::vector<int>> r_deps;      // pi-add dependencies
  std::vector<int> outputs;                    // unmeasured vertices
  std::map<int, std::vector<int>> out_x_deps;  // X byproduct parity per output
  std::map<int, std::vector<int>> out_z_deps;  // Z byproduct parity per output

  void validate() const {
    const int n = graph.num_vertices();
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
      require(order[i] >= 0 && order[i] < n, "pattern: measured vertex out of range");
      require(pos[order[i]] == -1, "pattern: vertex measured twice");
      pos[order[i]] = static_cast<int>(i);
    }
    for (int o : outputs) {
      require(o >= 0 && o < n, "pattern: output out of range");
      require(pos[o] == -1, "pattern: output vertex also measured");
    }
    require(order.size() + outputs.size() == static_cast<std::size_t>(n),
            "pattern: every vertex is either measured or an output");
    for (int v : order)
      require(angles.contains(v), "pattern: measured vertex lacks an angle");
    auto check_deps = [&](const std::map<int, std::vector<int>>& deps, bool output_side) {
      for (const auto& [v, ds] : deps) {
        for (int d : ds) {
          require(pos[d] != -1, "pattern: dependency on unmeasured vertex");
          if (!output_side)
            require(pos[d] < pos[v], "pattern: dependency must reference an earlier vertex");
        }
      }
    };
    check_deps(s_deps, false);
    check_deps(r_deps, false);
    check_deps(out_x_deps, true);
    check_deps(out_z_deps, true);
  }
};

/// Incremental simulator of pattern execution over the graph's qubits.
///
/// Vertices are introduced lazily: a vertex enters the register right before
/// the first measurement that touches it (its own, or a neighbor's), with CZ
/// edges applied as both endpoints become live. Measured qubits are removed
/// from the register, so the active window stays near the graph's frontier
/// width instead of its full vertex count. `materialize_all` forces the whole
/// graph up front, which keeps attack injection semantics exact for
/// adversarial runs (a Pauli applied to a live qubit commutes differently
/// with CZ than one applied before entangling).
class PatternExecutor {
 public:
  PatternExecutor(const Graph& graph, std::map<int, StateVector> preparations,
                  bool materialize_all = false)
      : graph_(graph), preps_(std::move(preparations)), slot_of_(graph.num_vertices(), -1),
        introduced_(graph.num_vertices(), false), measured_(graph.num_vertices(), false) {
    if (materialize_all)
      for (int v = 0; v < graph_.num_vertices(); ++v) introduce(v);
  }

  /// Measures `vertex` in the XY basis at `delta`; returns the outcome bit.
  int measure_xy_at(int vertex, Angle delta, Rng& rng) {
    touch_for_measurement(vertex);
    require(!measured_[vertex], "executor: vertex already measured");
    auto rec = measure_xy(state_, slot_of_[vertex], delta, rng);
    state_ = drop_qubit(rec.post_state, slot_of_[vertex]);
    forget(vertex);
    return static_cast<int>(rec.outcome);
  }

  /// Measures `vertex` in the computational basis (used for dummy qubits and
  /// output sampling).
  int measure_z(int vertex, Rng& rng) {
    touch_for_measurement(vertex);
    require(!measured_[vertex], "executor: vertex already measured");
    auto rec = measure_computational(state_, {slot_of_[vertex]}, rng);
    state_ = drop_qubit(rec.post_state, slot_of_[vertex]);
    forget(vertex);
    return static_cast<int>(rec.outcome);
  }

  /// Applies a single-qubit unitary to a live (or not yet introduced) vertex.
  void apply_gate(int vertex, const Mat& u) {
    require(!measured_[vertex], "executor: gate on measured vertex");
    introduce(vertex);
    state_ = apply_unitary(state_, u, {slot_of_[vertex]});
  }

  bool is_measured(int vertex) const { return measured_[vertex]; }

  /// Remaining register as a state over `vertices` (in the given order).
  /// Every unlisted vertex must already be measured.
  StateVector extract(const std::vector<int>& vertices) {
    for (int v : vertices) introduce(v);
    flush_edges();
    require(static_cast<std::size_t>(state_.num_qubits()) == vertices.size(),
            "executor: extract must list every live vertex");
    // Permute so vertices[i] lands on qubit i.
    const std::uint64_t dim = state_.dim();
    Vec out(dim);
    std::vector<int> src(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      require(slot_of_[vertices[i]] >= 0, "executor: extract of dead vertex");
      src[i] = slot_of_[vertices[i]];
    }
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
      std::uint64_t from = 0;
      for (std::size_t i = 0; i < src.size(); ++i)
        if (idx >> i & 1) from |= std::uint64_t{1} << src[i];
      out(idx) = state_.amplitudes()(from);
    }
    return StateVector::unchecked(static_cast<int>(vertices.size()), std::move(out));
  }

 private:
  void introduce(int v) {
    if (introduced_[v]) return;
    require(!measured_[v], "executor: reintroducing a measured vertex");
    StateVector prep =
        preps_.contains(v) ? preps_.at(v) : StateVector::plus_theta(Angle(0));
    require(prep.num_qubits() == 1, "executor: preparations must be single qubits");
    state_ = state_.tensor(prep);
    slot_of_[v] = state_.num_qubits() - 1;
    introduced_[v] = true;
    live_.push_back(v);
    // Apply any CZ edge whose both endpoints are now live.
    for (int w : graph_.neighbors(v))
      if (introduced_[w] && !measured_[w])
        state_ = apply_unitary(state_, gates::CZ(), {slot_of_[v], slot_of_[w]});
  }

  void touch_for_measurement(int v) {
    introduce(v);
    for (int w : graph_.neighbors(v))
      if (!measured_[w]) introduce(w);
  }

  void flush_edges() {}  // edges are applied eagerly on introduction

  static StateVector drop_qubit(const StateVector& s, int slot) {
    // After an XY or computational measurement the qubit at `slot` is in a
    // definite single-qubit state, in product with the rest; contract it out.
    const std::uint64_t dim = s.dim() >> 1;
    const std::uint64_t bit = std::uint64_t{1} << slot;
    Vec out(dim);
    // Weight of the slot's |0> component; if negligible use the |1> slice.
    double w0 = 0;
    for (std::uint64_t i = 0; i < s.dim(); ++i)
      if (!(i & bit)) w0 += std::norm(s.amplitudes()(i));
    bool use_one = w0 < 0.5;
    double scale = 1.0 / std::sqrt(use_one ? 1.0 - w0 : w0);
    for (std::uint64_t rest = 0; rest < dim; ++rest) {
      std::uint64_t low = rest & (bit - 1);
      std::uint64_t high = (rest & ~(bit - 1)) << 1;
      std::uint64_t idx = low | high | (use_one ? bit : 0);
      out(rest) = s.amplitudes()(idx) * scale;
    }
    return StateVector::unchecked(s.num_qubits() - 1, std::move(out));
  }

  void forget(int v) {
    measured_[v] = true;
    introduced_[v] = true;
    int gone = slot_of_[v];
    slot_of_[v] = -1;
    for (int& s : slot_of_)
      if (s > gone) --s;
    live_.erase(std::find(live_.begin(), live_.end(), v));
  }

  Graph graph_;
  std::map<int, StateVector> preps_;
  StateVector state_;  // starts as the 0-qubit scalar
  std::vector<int> slot_of_;
  std::vector<bool> introduced_;
  std::vector<bool> measured_;
  std::vector<int> live_;
};

struct PatternRunResult {
  std::vector<int> outcomes;  // by vertex; -1 if unmeasured
  StateVector output_state;   // over pattern.outputs, in that order
  std::vector<int> output_x_byproduct;
  std::vector<int> output_z_byproduct;
};

/// Runs a pattern honestly: measures vertices in order at the corrected
/// angles, then returns outcomes, the residual output register, and the
/// byproduct parities. `angle_override` replaces the *corrected* angle for
/// the listed vertices (used by delegation protocols, where the verifier
/// supplies precomputed deltas); `preparations` overrides initial states.
inline PatternRunResult run_pattern(const MeasurementPattern& pattern, Rng& rng,
                                    const std::map<int, Angle>* angle_override = nullptr,
                                    const std::map<int, StateVector>* preparations = nullptr,
                                    bool materialize_all = false) {
  pattern.validate();
  PatternExecutor exec(pattern.graph,
                       preparations ? *preparations : std::map<int, StateVector>{},
                       materialize_all);
  std::vector<int> outcomes(pattern.graph.num_vertices(), -1);
  auto parity = [&](const std::map<int, std::vector<int>>& deps, int v) {
    auto it = deps.find(v);
    if (it == deps.end()) return 0;
    int p = 0;
    for (int d : it->second) {
      require(outcomes[d] >= 0, "run_pattern: dependency not yet measured");
      p ^= outcomes[d];
    }
    return p;
  };
  for (int v : pattern.order) {
    Angle delta;
    if (angle_override && angle_override->contains(v)) {
      delta = angle_override->at(v);
    } else {
      int s = parity(pattern.s_deps, v);
      int r = parity(pattern.r_deps, v);
      Angle phi = pattern.angles.at(v);
      delta = Angle(s ? -phi.units() : phi.units()).plus_half_turns(r);
    }
    outcomes[v] = exec.measure_xy_at(v, delta, rng);
  }
  PatternRunResult res;
  res.outcomes = std::move(outcomes);
  res.output_state = exec.extract(pattern.outputs);
  for (int o : pattern.outputs) {
    auto par = [&](const std::map<int, std::vector<int>>& deps) {
      auto it = deps.find(o);
      int p = 0;
      if (it != deps.end())
        for (int d : it->second) p ^= res.outcomes[d];
      return p;
    };
    res.output_x_byproduct.push_back(par(pattern.out_x_deps));
    res.output_z_byproduct.push_back(par(pattern.out_z_deps));
  }
  return res;
}

/// Measures the pattern's outputs in the computational basis and undoes the
/// X byproducts, yielding circuit-equivalent output bits (bit i is output i).
inline std::uint64_t sample_pattern_bits(const MeasurementPattern& pattern, Rng& rng,
                                         const std::map<int, StateVector>* preparations = nullptr) {
  PatternRunResult r = run_pattern(pattern, rng, nullptr, preparations);
  Rng& rr = rng;
  std::uint64_t bits = 0;
  StateVector s = r.output_state;
  for (std::size_t i = 0; i < pattern.outputs.size(); ++i) {
    auto rec = measure_computational(s, {static_cast<int>(i)}, rr);
    s = rec.post_state;
    int bit = static_cast<int>(rec.outcome) ^ r.output_x_byproduct[i];
    bits |= static_cast<std::uint64_t>(bit) << i;
  }
  return bits;
}

}  // namespace veriq

#endif  // VERIQ_MBQC_PATTERN_HPP
