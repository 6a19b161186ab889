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

#ifndef VERIQ_QSIM_GATES_HPP
#define VERIQ_QSIM_GATES_HPP

#include <cmath>
#include <span>
#include <vector>

#include "veriq/qsim/state_vector.hpp"

namespace veriq::gates {

inline Mat I2() { return Mat::Identity(2, 2); }

inline Mat X() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Mat Y() {
  Mat m(2, 2);
  m << 0, cx(0, -1), cx(0, 1), 0;
  return m;
}

inline Mat Z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline Mat H() {
  Mat m(2, 2);
  double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

inline Mat S() {
  Mat m(2, 2);
  m << 1, 0, 0, cx(0, 1);
  return m;
}

inline Mat Sdg() { return S().adjoint(); }

inline Mat T() {
  Mat m(2, 2);
  m << 1, 0, 0, std::polar(1.0, kPi / 4);
  return m;
}

inline Mat Tdg() { return T().adjoint(); }

/// diag(1, e^{i theta})
inline Mat Rz(double theta) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = 1;
  m(1, 1) = std::polar(1.0, theta);
  return m;
}

/// Two-qubit gates follow the same index convention as StateVector: the first
/// target is bit 0 of the 2^k-dimensional gate index.
inline Mat CNOT() {
  Mat m = Mat::Zero(4, 4);
  // control = bit 0, target = bit 1
  m(0, 0) = 1;
  m(3, 1) = 1;
  m(2, 2) = 1;
  m(1, 3) = 1;
  return m;
}

inline Mat CZ() {
  Mat m = Mat::Identity(4, 4);
  m(3, 3) = -1;
  return m;
}

inline Mat SWAP() {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = 1;
  m(2, 1) = 1;
  m(1, 2) = 1;
  m(3, 3) = 1;
  return m;
}

inline Mat CCNOT() {
  Mat m = Mat::Identity(8, 8);
  // controls = bits 0,1; target = bit 2
  m(3, 3) = 0;
  m(7, 7) = 0;
  m(7, 3) = 1;
  m(3, 7) = 1;
  return m;
}

/// Observable R(theta) = cos(theta) X + sin(theta) Z.
inline Mat rotation_observable(double theta) {
  return std::cos(theta) * X() + std::sin(theta) * Z();
}

inline bool is_unitary(const Mat& m, double tol = 1e-10) {
  if (m.rows() != m.cols()) return false;
  return (m.adjoint() * m - Mat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() < tol;
}

inline bool is_hermitian(const Mat& m, double tol = 1e-10) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() < tol;
}

}  // namespace veriq::gates

namespace veriq {

/// Applies a k-qubit unitary to the given targets of a state. Gate row/column
/// indices encode targets[0] as bit 0, targets[1] as bit 1, and so on.
/// Returns a new state; the input is unchanged.
inline StateVector apply_unitary(const StateVector& state, const Mat& gate,
                                 std::span<const int> targets) {
  const int k = static_cast<int>(targets.size());
  require(gate.rows() == gate.cols() &&
              gate.rows() == static_cast<Eigen::Index>(dim_of(k)),
          "apply_unitary: gate dimension does not match target count");
  require(gates::is_unitary(gate), "apply_unitary: matrix is not unitary");
  std::uint64_t seen = 0;
  for (int t : targets) {
    require(t >= 0 && t < state.num_qubits(), "apply_unitary: target out of range");
    require(!(seen >> t & 1), "apply_unitary: duplicate target");
    seen |= std::uint64_t{1} << t;
  }

  const std::uint64_t dim = state.dim();
  const std::uint64_t sub = dim_of(k);
  Vec out = Vec::Zero(dim);
  // Iterate over all assignments of the non-target qubits, then mix the
  // 2^k-dimensional block spanned by the targets.
  std::vector<std::uint64_t> masks(k);
  for (int i = 0; i < k; ++i) masks[i] = std::uint64_t{1} << targets[i];

  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & seen) continue;  // enumerate indices with all target bits 0
    // Gather input block.
    for (std::uint64_t row = 0; row < sub; ++row) {
      std::uint64_t ridx = base;
      for (int i = 0; i < k; ++i)
        if (row >> i & 1) ridx |= masks[i];
      cx acc = 0;
      for (std::uint64_t col = 0; col < sub; ++col) {
        cx g = gate(row, col);
        if (g == cx(0, 0)) continue;
        std::uint64_t cidx = base;
        for (int i = 0; i < k; ++i)
          if (col >> i & 1) cidx |= masks[i];
        acc += g * state.amplitudes()(cidx);
      }
      out(ridx) = acc;
    }
  }
  return StateVector::unchecked(state.num_qubits(), std::move(out));
}

inline StateVector apply_unitary(const StateVector& state, const Mat& gate,
                                 std::initializer_list<int> targets) {
  return apply_unitary(state, gate, std::span<const int>(targets.begin(), targets.size()));
}

/// Embeds a k-qubit operator acting on `targets` into the full 2^n space.
inline Mat embed_operator(int num_qubits, const Mat& op, std::span<const int> targets) {
  const int k = static_cast<int>(targets.size());
  require(op.rows() == static_cast<Eigen::Index>(dim_of(k)), "embed_operator: size mismatch");
  const std::uint64_t dim = dim_of(num_qubits);
  Mat full = Mat::Zero(dim, dim);
  std::uint64_t tmask = 0;
  for (int t : targets) tmask |= std::uint64_t{1} << t;
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & tmask) continue;
    for (std::uint64_t row = 0; row < dim_of(k); ++row) {
      std::uint64_t ridx = base;
      for (int i = 0; i < k; ++i)
        if (row >> i & 1) ridx |= std::uint64_t{1} << targets[i];
      for (std::uint64_t col = 0; col < dim_of(k); ++col) {
        std::uint64_t cidx = base;
        for (int i = 0; i < k; ++i)
          if (col >> i & 1) cidx |= std::uint64_t{1} << targets[i];
        full(ridx, cidx) = op(row, col);
      }
    }
  }
  return full;
}

inline Mat embed_operator(int num_qubits, const Mat& op, std::initializer_list<int> targets) {
  return embed_operator(num_qubits, op, std::span<const int>(targets.begin(), targets.size()));
}

}  // namespace veriq

#endif  // VERIQ_QSIM_GATES_HPP
