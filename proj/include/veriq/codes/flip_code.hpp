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

#ifndef VERIQ_CODES_FLIP_CODE_HPP
#define VERIQ_CODES_FLIP_CODE_HPP

#include <optional>

#include "veriq/pauli/pauli_operator.hpp"
#include "veriq/qsim/gates.hpp"
#include "veriq/qsim/measure.hpp"

namespace veriq {

struct Flip3Result {
  int syndrome_zz01 = +1;  // Z x Z x I outcome
  int syndrome_zz12 = +1;  // I x Z x Z outcome
  StateVector corrected;   // decoded single-qubit state
};

/// One full cycle of the 3-qubit bit-flip code: encode a single-qubit state,
/// optionally apply an X error (position 1..3), measure the syndrome
/// observables ZZI and IZZ, correct, and decode.
///
/// The syndrome is deterministic given the error position, and the decoded
/// state equals the input with fidelity 1.
inline Flip3Result flip3_cycle(const StateVector& logical, std::optional<int> error_position,
                               Rng& rng) {
  require(logical.num_qubits() == 1, "flip3_cycle: logical input must be one qubit");
  require(!error_position || (*error_position >= 1 && *error_position <= 3),
          "flip3_cycle: error position must be 1..3");

  // Encode a|0> + b|1> -> a|000> + b|111>.
  StateVector s = logical.tensor(StateVector::zero(2));
  s = apply_unitary(s, gates::CNOT(), {0, 1});
  s = apply_unitary(s, gates::CNOT(), {0, 2});

  if (error_position) s = apply_unitary(s, gates::X(), {*error_position - 1});

  auto g1 = PauliOperator::from_label("ZZI");
  auto g2 = PauliOperator::from_label("IZZ");
  auto r1 = measure_observable(s, g1.matrix(), {0, 1, 2}, rng);
  auto r2 = measure_observable(r1.post_state, g2.matrix(), {0, 1, 2}, rng);
  int s1 = r1.eigenvalue > 0 ? +1 : -1;
  int s2 = r2.eigenvalue > 0 ? +1 : -1;
  s = r2.post_state;

  // (-1,-1) -> qubit 2, (-1,+1) -> qubit 1, (+1,-1) -> qubit 3.
  if (s1 < 0 && s2 < 0)
    s = apply_unitary(s, gates::X(), {1});
  else if (s1 < 0)
    s = apply_unitary(s, gates::X(), {0});
  else if (s2 < 0)
    s = apply_unitary(s, gates::X(), {2});

  // Decode and drop the ancilla qubits (now |00>).
  s = apply_unitary(s, gates::CNOT(), {0, 2});
  s = apply_unitary(s, gates::CNOT(), {0, 1});
  Vec out(2);
  out(0) = s.amplitude(0b000);
  out(1) = s.amplitude(0b001);
  require(std::abs(out.squaredNorm() - 1.0) < 1e-9, "flip3_cycle: residual ancilla weight");
  return {s1, s2, StateVector::unchecked(1, std::move(out))};
}

}  // namespace veriq

#endif  // VERIQ_CODES_FLIP_CODE_HPP
