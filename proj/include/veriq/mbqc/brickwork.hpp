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

#ifndef VERIQ_MBQC_BRICKWORK_HPP
#define VERIQ_MBQC_BRICKWORK_HPP

#include <array>
#include <vector>

#include "veriq/circuit/circuit.hpp"
#include "veriq/mbqc/pattern.hpp"

namespace veriq {

/// Rectangular brickwork-style layout: one chain of measured qubits per
/// circuit wire, advancing in lockstep two columns per gate moment, with
/// sparse vertical CZ links realizing the entangling gates. Column 0 holds
/// the inputs; the last column holds the outputs.
struct BrickworkSpec {
  int rows = 0;
  int columns = 0;  // number of J-step columns (inputs excluded)
  std::vector<std::vector<Angle>> j_angles;  // [row][col]: implemented J angle
  std::vector<std::pair<int, int>> cross_edges;  // vertex ids
  int vertex(int row, int col) const { return row * (columns + 1) + col; }
};

struct BrickworkCompilation {
  BrickworkSpec spec;
  MeasurementPattern pattern;
};

namespace detail {

struct Moment {
  // Two J angles (units of pi/4) per wire for this moment's two columns.
  std::vector<std::array<int, 2>> j;
  // Optional vertical link: {wire_a, col_offset_a, wire_b, col_offset_b}.
  bool has_cross = false;
  int cross_wire_a = 0, cross_off_a = 0, cross_wire_b = 0, cross_off_b = 0;
  // Within-column measurement priority: wire to measure first at offset 0.
  int priority_wire = -1;
};

inline std::vector<Moment> gate_moments(const Gate& g, int wires) {
  auto idle = [&] {
    Moment m;
    m.j.assign(wires, {0, 0});
    return m;
  };
  std::vector<Moment> out;
  switch (g.kind) {
    case GateKind::X: {
      auto m = idle();
      m.j[g.qubits[0]] = {0, 4};
      out.push_back(m);
      break;
    }
    case GateKind::Y: {
      auto m = idle();
      m.j[g.qubits[0]] = {4, 4};
      out.push_back(m);
      break;
    }
    case GateKind::Z: {
      auto m = idle();
      m.j[g.qubits[0]] = {4, 0};
      out.push_back(m);
      break;
    }
    case GateKind::S: {
      auto m = idle();
      m.j[g.qubits[0]] = {2, 0};
      out.push_back(m);
      break;
    }
    case GateKind::Sdg: {
      auto m = idle();
      m.j[g.qubits[0]] = {6, 0};
      out.push_back(m);
      break;
    }
    case GateKind::T: {
      auto m = idle();
      m.j[g.qubits[0]] = {1, 0};
      out.push_back(m);
      break;
    }
    case GateKind::Tdg: {
      auto m = idle();
      m.j[g.qubits[0]] = {7, 0};
      out.push_back(m);
      break;
    }
    case GateKind::H: {
      // Euler decomposition Rz(pi/2) Rx(pi/2) Rz(pi/2), one rotation per moment.
      auto m1 = idle(), m2 = idle(), m3 = idle();
      m1.j[g.qubits[0]] = {2, 0};
      m2.j[g.qubits[0]] = {0, 2};
      m3.j[g.qubits[0]] = {2, 0};
      out.push_back(m1);
      out.push_back(m2);
      out.push_back(m3);
      break;
    }
    case GateKind::CZ: {
      auto m = idle();
      m.has_cross = true;
      m.cross_wire_a = g.qubits[0];
      m.cross_off_a = 0;
      m.cross_wire_b = g.qubits[1];
      m.cross_off_b = 0;
      out.push_back(m);
      break;
    }
    case GateKind::CNOT: {
      // H_t CZ H_t: vertical link lands after one J step on the target wire.
      auto m = idle();
      m.has_cross = true;
      m.cross_wire_a = g.qubits[0];  // control
      m.cross_off_a = 0;
      m.cross_wire_b = g.qubits[1];  // target
      m.cross_off_b = 1;
      m.priority_wire = g.qubits[1];  // target's column-0 vertex measured first
      out.push_back(m);
      break;
    }
    default:
      throw contract_error("compile_brickwork: unsupported gate");
  }
  return out;
}

}  // namespace detail

/// Compiles a circuit over {X, Y, Z, H, S, SDG, T, TDG, CNOT, CZ} into a
/// measurement pattern whose output distribution matches the circuit.
/// Caps: width <= 3, at most 18 gates.
inline BrickworkCompilation compile_brickwork(const Circuit& circuit) {
  const int wires = circuit.num_qubits();
  require(wires >= 1 && wires <= 3, "compile_brickwork: width cap is 3");
  require(circuit.size() <= 18, "compile_brickwork: gate count cap is 18");

  std::vector<detail::Moment> moments;
  for (const auto& g : circuit.ops())
    for (auto& m : detail::gate_moments(g, wires)) moments.push_back(m);

  BrickworkSpec spec;
  spec.rows = wires;
  spec.columns = static_cast<int>(moments.size()) * 2;
  spec.j_angles.assign(wires, std::vector<Angle>(spec.columns, Angle(0)));

  const int cols_total = spec.columns + 1;
  Graph graph(wires * cols_total);
  for (int r = 0; r < wires; ++r)
    for (int c = 0; c + 1 < cols_total; ++c)
      graph.add_edge(spec.vertex(r, c), spec.vertex(r, c + 1));

  // Measurement order: column-major with a per-moment wire priority at the
  // moment's base column (needed so vertical-link corrections reference
  // earlier outcomes only).
  std::vector<int> order;
  std::vector<int> priority_at_col(cols_total, -1);
  for (std::size_t m = 0; m < moments.size(); ++m) {
    int base = static_cast<int>(m) * 2;
    if (moments[m].has_cross) {
      int va = spec.vertex(moments[m].cross_wire_a, base + moments[m].cross_off_a);
      int vb = spec.vertex(moments[m].cross_wire_b, base + moments[m].cross_off_b);
      graph.add_edge(va, vb);
      spec.cross_edges.push_back({va, vb});
      if (moments[m].priority_wire >= 0) priority_at_col[base] = moments[m].priority_wire;
    }
    for (int r = 0; r < wires; ++r) {
      spec.j_angles[r][base] = Angle(moments[m].j[r][0]);
      spec.j_angles[r][base + 1] = Angle(moments[m].j[r][1]);
    }
  }
  for (int c = 0; c + 1 < cols_total; ++c) {
    if (priority_at_col[c] >= 0) order.push_back(spec.vertex(priority_at_col[c], c));
    for (int r = 0; r < wires; ++r)
      if (r != priority_at_col[c]) order.push_back(spec.vertex(r, c));
  }

  MeasurementPattern pat;
  pat.graph = graph;
  pat.order = order;
  for (int r = 0; r < wires; ++r) {
    // Measuring at -theta implements J(theta): vertex (r, c) consumes the
    // J angle assigned to column c.
    for (int c = 0; c < spec.columns; ++c)
      pat.angles[spec.vertex(r, c)] = -spec.j_angles[r][c];
    pat.outputs.push_back(spec.vertex(r, spec.columns));
  }

  // Flow corrections: successor of (r, c) is (r, c+1).
  std::vector<bool> is_output(graph.num_vertices(), false);
  for (int o : pat.outputs) is_output[o] = true;
  for (int r = 0; r < wires; ++r) {
    for (int c = 0; c < spec.columns; ++c) {
      int v = spec.vertex(r, c);
      int u = spec.vertex(r, c + 1);
      if (is_output[u])
        pat.out_x_deps[u].push_back(v);
      else
        pat.s_deps[u].push_back(v);
      for (int w : graph.neighbors(u)) {
        if (w == v) continue;
        if (is_output[w])
          pat.out_z_deps[w].push_back(v);
        else
          pat.r_deps[w].push_back(v);
      }
    }
  }
  pat.validate();
  return {std::move(spec), std::move(pat)};
}

/// Input preparations for running a compiled pattern on |bits>.
inline std::map<int, StateVector> brickwork_input(const BrickworkSpec& spec,
                                                  std::uint64_t bits) {
  std::map<int, StateVector> preps;
  for (int r = 0; r < spec.rows; ++r)
    preps[spec.vertex(r, 0)] = StateVector::computational(1, bits >> r & 1);
  return preps;
}

/// Empirical output distribution of a compiled pattern over `samples` runs.
inline std::vector<double> pattern_output_distribution(const BrickworkCompilation& comp,
                                                       std::uint64_t input_bits,
                                                       int samples, Rng& rng) {
  std::vector<double> hist(std::uint64_t{1} << comp.spec.rows, 0.0);
  auto preps = brickwork_input(comp.spec, input_bits);
  for (int s = 0; s < samples; ++s)
    hist[sample_pattern_bits(comp.pattern, rng, &preps)] += 1.0;
  for (auto& h : hist) h /= samples;
  return hist;
}

}  // namespace veriq

#endif  // VERIQ_MBQC_BRICKWORK_HPP
