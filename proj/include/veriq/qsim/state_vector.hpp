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

#ifndef VERIQ_QSIM_STATE_VECTOR_HPP
#define VERIQ_QSIM_STATE_VECTOR_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "veriq/core/angle.hpp"
#include "veriq/core/types.hpp"

namespace veriq {

/// Dense pure state on `num_qubits` qubits.
///
/// Index convention: qubit j corresponds to bit j of the amplitude index, so
/// basis state |b> has amplitude at index sum_j b_j 2^j. All operations are
/// value semantic: they return new states and never mutate their inputs.
class StateVector {
 public:
  StateVector() : num_qubits_(0), amps_(Vec::Ones(1)) {}

  StateVector(int num_qubits, Vec amplitudes)
      : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    require(num_qubits >= 0 && num_qubits <= kMaxStateQubits,
            "StateVector: qubit count exceeds cap");
    require(amps_.size() == static_cast<Eigen::Index>(dim_of(num_qubits)),
            "StateVector: amplitude length != 2^n");
    require(std::abs(amps_.squaredNorm() - 1.0) < 1e-10,
            "StateVector: not normalized");
  }

  /// |0...0>
  static StateVector zero(int num_qubits) {
    return computational(num_qubits, 0);
  }

  /// Computational basis state |bits> (bit j of `bits` is qubit j).
  static StateVector computational(int num_qubits, std::uint64_t bits) {
    require(num_qubits >= 0 && num_qubits <= kMaxStateQubits,
            "StateVector: qubit count exceeds cap");
    Vec v = Vec::Zero(dim_of(num_qubits));
    v(bits) = 1.0;
    StateVector s;
    s.num_qubits_ = num_qubits;
    s.amps_ = std::move(v);
    return s;
  }

  /// Single-qubit |+_theta> = (|0> + e^{i theta} |1>)/sqrt(2).
  static StateVector plus_theta(Angle theta) {
    Vec v(2);
    v(0) = 1.0 / std::sqrt(2.0);
    v(1) = std::polar(1.0 / std::sqrt(2.0), theta.radians());
    StateVector s;
    s.num_qubits_ = 1;
    s.amps_ = std::move(v);
    return s;
  }

  /// Single-qubit |-_theta> = (|0> - e^{i theta} |1>)/sqrt(2).
  static StateVector minus_theta(Angle theta) {
    return plus_theta(theta.plus_half_turns(1));
  }

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dim() const { return dim_of(num_qubits_); }
  const Vec& amplitudes() const { return amps_; }
  cx amplitude(std::uint64_t index) const { return amps_(index); }

  /// <this|other>
  cx inner(const StateVector& other) const {
    require(num_qubits_ == other.num_qubits_, "inner: size mismatch");
    return amps_.dot(other.amps_);
  }

  /// |<this|other>|, invariant under global phase.
  double fidelity(const StateVector& other) const { return std::abs(inner(other)); }

  StateVector tensor(const StateVector& other) const {
    require(num_qubits_ + other.num_qubits_ <= kMaxStateQubits,
            "tensor: qubit count exceeds cap");
    Vec v(dim() * other.dim());
    // Qubits of *this* occupy the low bits of the combined index.
    for (std::uint64_t j = 0; j < other.dim(); ++j)
      for (std::uint64_t i = 0; i < dim(); ++i) v(j * dim() + i) = amps_(i) * other.amps_(j);
    StateVector s;
    s.num_qubits_ = num_qubits_ + other.num_qubits_;
    s.amps_ = std::move(v);
    return s;
  }

  double norm_error() const { return std::abs(amps_.squaredNorm() - 1.0); }

  // Internal: construct without the normalization check (used after verified
  // renormalization steps).
  static StateVector unchecked(int num_qubits, Vec amplitudes) {
    StateVector s;
    s.num_qubits_ = num_qubits;
    s.amps_ = std::move(amplitudes);
    return s;
  }

 private:
  int num_qubits_;
  Vec amps_;
};

inline StateVector tensor(const StateVector& a, const StateVector& b) { return a.tensor(b); }

}  // namespace veriq

#endif  // VERIQ_QSIM_STATE_VECTOR_HPP
