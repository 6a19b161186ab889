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

#ifndef VERIQ_PAULI_TWIRL_HPP
#define VERIQ_PAULI_TWIRL_HPP

#include "veriq/pauli/clifford.hpp"
#include "veriq/qsim/density_matrix.hpp"

namespace veriq {

enum class TwirlGroup { Clifford, Pauli };

/// Exact twirl average (1/|G|) sum_{g in G} g^dag P1 g rho g^dag P2 g.
///
/// For the Clifford group the sum runs over the full enumeration (n <= 2);
/// for the Pauli group over all 4^n mask classes (n <= 3), where the phase of
/// the group element cancels between the two sides.
inline Mat twirl_average(const DensityMatrix& rho, const PauliOperator& p1,
                         const PauliOperator& p2, TwirlGroup group) {
  const int n = rho.num_qubits();
  require(p1.num_qubits() == n && p2.num_qubits() == n, "twirl_average: size mismatch");
  const std::uint64_t d = rho.dim();
  Mat acc = Mat::Zero(d, d);
  if (group == TwirlGroup::Clifford) {
    require(n <= 2, "twirl_average: Clifford group enumeration only for n <= 2");
    const auto& cliffs = enumerate_cliffords(n);
    for (const auto& c : cliffs) {
      CliffordElement inv = c.inverse();
      Mat a = inv.conjugate(p1).matrix();  // C^dag P1 C
      Mat b = inv.conjugate(p2).matrix();
      acc += a * rho.matrix() * b;
    }
    acc /= static_cast<double>(cliffs.size());
  } else {
    require(n <= 3, "twirl_average: Pauli group twirl only for n <= 3");
    const std::uint64_t masks = d * d;
    for (std::uint64_t m = 0; m < masks; ++m) {
      PauliOperator q(n, m & (d - 1), m >> n);
      Mat a = (q.adjoint() * p1 * q).matrix();
      Mat b = (q.adjoint() * p2 * q).matrix();
      acc += a * rho.matrix() * b;
    }
    acc /= static_cast<double>(masks);
  }
  return acc;
}

/// Exact Clifford decoherence map for a fixed non-identity Pauli P:
/// (1/|C_n|) sum_C (C^dag P C) rho (C^dag P C)^dag. Equals the uniform
/// mixture over non-identity Pauli conjugations of rho.
inline Mat clifford_decoherence(const DensityMatrix& rho, const PauliOperator& p) {
  const int n = rho.num_qubits();
  require(n <= 2, "clifford_decoherence: n <= 2");
  const auto& cliffs = enumerate_cliffords(n);
  Mat acc = Mat::Zero(rho.dim(), rho.dim());
  for (const auto& c : cliffs) {
    Mat a = c.inverse().conjugate(p).matrix();
    acc += a * rho.matrix() * a.adjoint();
  }
  return acc / static_cast<double>(cliffs.size());
}

/// Uniform mixture of rho conjugated by every non-identity Pauli mask class.
inline Mat uniform_nonidentity_pauli_mixture(const DensityMatrix& rho) {
  const int n = rho.num_qubits();
  const std::uint64_t d = rho.dim();
  Mat acc = Mat::Zero(d, d);
  for (std::uint64_t m = 1; m < d * d; ++m) {
    PauliOperator q(n, m & (d - 1), m >> n);
    Mat a = q.matrix();
    acc += a * rho.matrix() * a.adjoint();
  }
  return acc / static_cast<double>(d * d - 1);
}

}  // namespace veriq

#endif  // VERIQ_PAULI_TWIRL_HPP
