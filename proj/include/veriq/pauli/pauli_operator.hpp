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

#ifndef VERIQ_PAULI_PAULI_OPERATOR_HPP
#define VERIQ_PAULI_PAULI_OPERATOR_HPP

#include <bit>
#include <cstdint>
#include <string>

#include "veriq/qsim/state_vector.hpp"

namespace veriq {

/// Phased n-qubit Pauli operator in symplectic form.
///
/// The represented matrix is i^phase_exp * prod_j X_j^{x_j} Z_j^{z_j}, where
/// x_j, z_j are bits j of x_mask and z_mask. Under this convention Y has
/// (x, z, phase_exp) = (1, 1, 1) since Y = i X Z.
class PauliOperator {
 public:
  PauliOperator() : n_(0), x_(0), z_(0), phase_(0) {}
  PauliOperator(int num_qubits, std::uint64_t x_mask, std::uint64_t z_mask, int phase_exp = 0)
      : n_(num_qubits), x_(x_mask), z_(z_mask), phase_(((phase_exp % 4) + 4) % 4) {
    require(num_qubits >= 0 && num_qubits <= 63, "PauliOperator: bad qubit count");
    std::uint64_t live = num_qubits == 0 ? 0 : (~std::uint64_t{0} >> (64 - num_qubits));
    require((x_ & ~live) == 0 && (z_ & ~live) == 0, "PauliOperator: mask exceeds qubits");
  }

  static PauliOperator identity(int num_qubits) { return PauliOperator(num_qubits, 0, 0, 0); }

  /// Builds from a label such as "IXZZX" (optionally prefixed with +, -, +i,
  /// -i). label[j] is the factor on qubit j.
  static PauliOperator from_label(const std::string& label) {
    std::size_t pos = 0;
    int phase = 0;
    if (pos < label.size() && (label[pos] == '+' || label[pos] == '-')) {
      if (label[pos] == '-') phase = 2;
      ++pos;
      if (pos < label.size() && label[pos] == 'i') {
        phase += 1;
        ++pos;
      }
    }
    std::uint64_t x = 0, z = 0;
    int n = 0;
    for (; pos < label.size(); ++pos, ++n) {
      switch (label[pos]) {
        case 'I':
        case '_':
          break;
        case 'X':
          x |= std::uint64_t{1} << n;
          break;
        case 'Y':
          x |= std::uint64_t{1} << n;
          z |= std::uint64_t{1} << n;
          phase += 1;
          break;
        case 'Z':
          z |= std::uint64_t{1} << n;
          break;
        default:
          throw contract_error("PauliOperator: invalid label character");
      }
    }
    return PauliOperator(n, x, z, phase);
  }

  int num_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  /// Exponent k of the phase i^k, k in {0,1,2,3}.
  int phase_exp() const { return phase_; }
  cx phase() const {
    static constexpr cx table[4] = {cx(1, 0), cx(0, 1), cx(-1, 0), cx(0, -1)};
    return table[phase_];
  }

  bool is_identity() const { return x_ == 0 && z_ == 0 && phase_ == 0; }
  bool is_identity_up_to_phase() const { return x_ == 0 && z_ == 0; }
  int weight() const { return std::popcount(x_ | z_); }

  /// True iff the operator is hermitian (phase +1 or -1 combined with the
  /// i-factors from Y components).
  bool is_hermitian() const {
    // (i^k XZ...)^dagger = i^{-k} (-1)^{#Y} ... ; hermitian iff 2k + #Y even.
    return (phase_ + std::popcount(x_ & z_)) % 2 == 0;
  }

  PauliOperator with_phase_exp(int k) const { return PauliOperator(n_, x_, z_, k); }

  bool commutes_with(const PauliOperator& o) const {
    require(n_ == o.n_, "commutes_with: size mismatch");
    return (std::popcount(x_ & o.z_) + std::popcount(z_ & o.x_)) % 2 == 0;
  }

  bool operator==(const PauliOperator&) const = default;

  /// Group product: matrix(result) == matrix(*this) * matrix(other).
  PauliOperator operator*(const PauliOperator& o) const {
    require(n_ == o.n_, "pauli multiply: size mismatch");
    // Reorder (X^a Z^b)(X^c Z^d): per qubit Z^b X^c = (-1)^{bc} X^c Z^b.
    int phase = phase_ + o.phase_ + 2 * std::popcount(z_ & o.x_);
    return PauliOperator(n_, x_ ^ o.x_, z_ ^ o.z_, phase);
  }

  PauliOperator adjoint() const {
    // dagger reverses factor order: (X^a Z^b)^dagger = Z^b X^a = (-1)^{ab} X^a Z^b.
    int phase = -phase_ + 2 * std::popcount(x_ & z_);
    return PauliOperator(n_, x_, z_, phase);
  }

  /// Applies to a state: i^k (-1)^{z.b} |b xor x>. Exact, O(2^n).
  StateVector apply(const StateVector& psi) const {
    require(psi.num_qubits() == n_, "pauli apply: size mismatch");
    Vec out(psi.dim());
    cx ph = phase();
    for (std::uint64_t b = 0; b < psi.dim(); ++b) {
      cx v = ph * psi.amplitudes()(b);
      if (std::popcount(b & z_) & 1) v = -v;
      out(b ^ x_) = v;
    }
    return StateVector::unchecked(n_, std::move(out));
  }

  /// <psi| P |psi>, computed without materializing the matrix.
  cx expectation(const StateVector& psi) const {
    require(psi.num_qubits() == n_, "pauli expectation: size mismatch");
    cx acc = 0;
    for (std::uint64_t b = 0; b < psi.dim(); ++b) {
      cx v = psi.amplitudes()(b);
      if (v == cx(0, 0)) continue;
      cx w = std::conj(psi.amplitudes()(b ^ x_)) * v;
      if (std::popcount(b & z_) & 1) w = -w;
      acc += w;
    }
    return phase() * acc;
  }

  Mat matrix() const {
    const std::uint64_t d = dim_of(n_);
    Mat m = Mat::Zero(d, d);
    cx ph = phase();
    for (std::uint64_t b = 0; b < d; ++b) {
      cx v = ph;
      if (std::popcount(b & z_) & 1) v = -v;
      m(b ^ x_, b) = v;
    }
    return m;
  }

  std::string str() const {
    // Display phase relative to letters, where Y absorbs one factor of i.
    int disp = ((phase_ - std::popcount(x_ & z_)) % 4 + 4) % 4;
    static const char* pre[4] = {"+", "+i", "-", "-i"};
    std::string out = pre[disp];
    for (int j = 0; j < n_; ++j) {
      bool x = x_ >> j & 1, z = z_ >> j & 1;
      out += x && z ? 'Y' : x ? 'X' : z ? 'Z' : 'I';
    }
    return out;
  }

 private:
  int n_;
  std::uint64_t x_;
  std::uint64_t z_;
  int phase_;  // exponent of i
};

struct PauliHash {
  std::size_t operator()(const PauliOperator& p) const {
    std::uint64_t h = splitmix64(p.x_mask() * 0x9e3779b97f4a7c15ULL ^ p.z_mask());
    h = splitmix64(h ^ (static_cast<std::uint64_t>(p.phase_exp()) << 32) ^
                   static_cast<std::uint64_t>(p.num_qubits()));
    return static_cast<std::size_t>(h);
  }
};

}  // namespace veriq

#endif  // VERIQ_PAULI_PAULI_OPERATOR_HPP
