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

#ifndef VERIQ_CIRCUIT_CIRCUIT_HPP
#define VERIQ_CIRCUIT_CIRCUIT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "veriq/qsim/gates.hpp"
#include "veriq/qsim/measure.hpp"

namespace veriq {

enum class GateKind { X, Y, Z, H, S, Sdg, T, Tdg, CNOT, CZ, CCNOT, SWAP };

inline int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
      return 2;
    case GateKind::CCNOT:
      return 3;
    default:
      return 1;
  }
}

inline const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "TDG";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::CCNOT: return "CCNOT";
    case GateKind::SWAP: return "SWAP";
  }
  return "?";
}

inline Mat gate_matrix(GateKind k) {
  switch (k) {
    case GateKind::X: return gates::X();
    case GateKind::Y: return gates::Y();
    case GateKind::Z: return gates::Z();
    case GateKind::H: return gates::H();
    case GateKind::S: return gates::S();
    case GateKind::Sdg: return gates::Sdg();
    case GateKind::T: return gates::T();
    case GateKind::Tdg: return gates::Tdg();
    case GateKind::CNOT: return gates::CNOT();
    case GateKind::CZ: return gates::CZ();
    case GateKind::CCNOT: return gates::CCNOT();
    case GateKind::SWAP: return gates::SWAP();
  }
  throw contract_error("unknown gate");
}

struct Gate {
  GateKind kind;
  std::vector<int> qubits;
};

/// Gate-list circuit over a fixed register width.
class Circuit {
 public:
  Circuit(int num_qubits, std::vector<Gate> gate_list = {})
      : n_(num_qubits), gates_(std::move(gate_list)) {
    require(n_ >= 1, "Circuit: need at least one qubit");
    for (const auto& g : gates_) check(g);
  }

  int num_qubits() const { return n_; }
  const std::vector<Gate>& ops() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  Circuit& append(GateKind k, std::vector<int> qubits) {
    Gate g{k, std::move(qubits)};
    check(g);
    gates_.push_back(std::move(g));
    return *this;
  }

  /// Parses lines of the form "H 0", "CNOT 0 1", "T 2". Blank lines and lines
  /// starting with '#' are skipped.
  static Circuit parse(int num_qubits, const std::string& text) {
    Circuit c(num_qubits);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string name;
      if (!(ls >> name) || name[0] == '#') continue;
      GateKind kind;
      if (name == "X") kind = GateKind::X;
      else if (name == "Y") kind = GateKind::Y;
      else if (name == "Z") kind = GateKind::Z;
      else if (name == "H") kind = GateKind::H;
      else if (name == "S") kind = GateKind::S;
      else if (name == "SDG") kind = GateKind::Sdg;
      else if (name == "T") kind = GateKind::T;
      else if (name == "TDG") kind = GateKind::Tdg;
      else if (name == "CNOT") kind = GateKind::CNOT;
      else if (name == "CZ") kind = GateKind::CZ;
      else if (name == "CCNOT") kind = GateKind::CCNOT;
      else if (name == "SWAP") kind = GateKind::SWAP;
      else throw contract_error("Circuit::parse: unknown gate " + name);
      std::vector<int> qubits;
      int q;
      while (ls >> q) qubits.push_back(q);
      c.append(kind, std::move(qubits));
    }
    return c;
  }

  std::string str() const {
    std::string out;
    for (const auto& g : gates_) {
      out += gate_name(g.kind);
      for (int q : g.qubits) out += " " + std::to_string(q);
      out += "\n";
    }
    return out;
  }

  StateVector apply(StateVector state) const {
    require(state.num_qubits() == n_, "Circuit::apply: width mismatch");
    for (const auto& g : gates_)
      state = apply_unitary(state, gate_matrix(g.kind),
                            std::span<const int>(g.qubits.data(), g.qubits.size()));
    return state;
  }

  /// Exact output distribution over computational-basis measurement of all
  /// qubits, starting from |bits>.
  std::vector<double> output_distribution(std::uint64_t input_bits = 0) const {
    StateVector s = apply(StateVector::computational(n_, input_bits));
    std::vector<double> probs(s.dim());
    for (std::uint64_t i = 0; i < s.dim(); ++i) probs[i] = std::norm(s.amplitude(i));
    return probs;
  }

  bool is_clifford() const {
    for (const auto& g : gates_)
      if (g.kind == GateKind::T || g.kind == GateKind::Tdg || g.kind == GateKind::CCNOT)
        return false;
    return true;
  }

 private:
  void check(const Gate& g) const {
    require(static_cast<int>(g.qubits.size()) == gate_arity(g.kind),
            "Circuit: wrong qubit count for gate");
    for (int q : g.qubits) require(q >= 0 && q < n_, "Circuit: qubit out of range");
    for (std::size_t i = 0; i < g.qubits.size(); ++i)
      for (std::size_t j = i + 1; j < g.qubits.size(); ++j)
        require(g.qubits[i] != g.qubits[j], "Circuit: duplicate qubit in gate");
  }

  int n_;
  std::vector<Gate> gates_;
};

/// Total variation distance between two distributions.
inline double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  require(a.size() == b.size(), "total_variation: size mismatch");
  double acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
  return acc / 2;
}

}  // namespace veriq

#endif  // VERIQ_CIRCUIT_CIRCUIT_HPP
