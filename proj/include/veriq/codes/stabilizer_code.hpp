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

#ifndef VERIQ_CODES_STABILIZER_CODE_HPP
#define VERIQ_CODES_STABILIZER_CODE_HPP

#include <string>
#include <vector>

#include "veriq/core/rng.hpp"
#include "veriq/pauli/pauli_operator.hpp"
#include "veriq/qsim/gates.hpp"

namespace veriq {

/// A stabilizer code given by its generator table. Only membership checks and
/// generator expectations are needed here; no decoding.
class StabilizerCode {
 public:
  StabilizerCode(std::string name, int num_physical, std::vector<PauliOperator> generators)
      : name_(std::move(name)), n_(num_physical), gens_(std::move(generators)) {
    for (const auto& g : gens_) {
      require(g.num_qubits() == n_, "StabilizerCode: generator size mismatch");
      require(g.is_hermitian() && (g * g).is_identity(),
              "StabilizerCode: generator must square to +I");
      for (const auto& h : gens_)
        require(g.commutes_with(h), "StabilizerCode: generators must commute");
    }
  }

  const std::string& name() const { return name_; }
  int num_physical() const { return n_; }
  const std::vector<PauliOperator>& generators() const { return gens_; }

  /// True iff every generator has expectation +1 within tol.
  bool codespace_check(const StateVector& state, double tol = 1e-9) const {
    require(state.num_qubits() == n_, "codespace_check: size mismatch");
    for (const auto& g : gens_) {
      cx e = g.expectation(state);
      if (std::abs(e - cx(1, 0)) > tol) return false;
    }
    return true;
  }

  /// Projects onto the code space: prod_i (I + g_i)/2.
  Mat codespace_projector() const {
    const std::uint64_t d = dim_of(n_);
    Mat proj = Mat::Identity(d, d);
    for (const auto& g : gens_) proj = proj * (Mat::Identity(d, d) + g.matrix()) / 2.0;
    return proj;
  }

  /// Codeword obtained by projecting |0...0> and normalizing.
  StateVector logical_from_zero() const {
    Vec v = codespace_projector().col(0);
    double norm = v.norm();
    require(norm > 1e-12, "logical_from_zero: |0..0> orthogonal to code space");
    return StateVector::unchecked(n_, v / norm);
  }

  /// Codeword from projecting a random state.
  StateVector random_codeword(Rng& rng) const {
    Mat proj = codespace_projector();
    for (;;) {
      Vec v(dim_of(n_));
      for (int i = 0; i < v.size(); ++i) v(i) = cx(rng.uniform() - 0.5, rng.uniform() - 0.5);
      Vec w = proj * v;
      double norm = w.norm();
      if (norm > 1e-6) return StateVector::unchecked(n_, w / norm);
    }
  }

 private:
  std::string name_;
  int n_;
  std::vector<PauliOperator> gens_;
};

/// [[5,1,3]] code: IXZZX, XIXZZ, ZXIXZ, ZZXIX.
inline StabilizerCode five_qubit_code() {
  return StabilizerCode("five-qubit", 5,
                        {PauliOperator::from_label("IXZZX"), PauliOperator::from_label("XIXZZ"),
                         PauliOperator::from_label("ZXIXZ"), PauliOperator::from_label("ZZXIX")});
}

/// Steane [[7,1,3]] code generators.
inline StabilizerCode steane_code() {
  return StabilizerCode(
      "steane", 7,
      {PauliOperator::from_label("IIIXXXX"), PauliOperator::from_label("IXXIIXX"),
       PauliOperator::from_label("XIXIXIX"), PauliOperator::from_label("IIIZZZZ"),
       PauliOperator::from_label("IZZIIZZ"), PauliOperator::from_label("ZIZIZIZ")});
}

/// Sum over the rotated five-qubit generators of their expectations.
///
/// The fifth-qubit operator of each generator is rotated halfway between X
/// and Z: X' = (X+Z)/sqrt(2), Z' = (X-Z)/sqrt(2). Each generator A(x)X_5 or
/// A(x)Z_5 then contributes its Bell-operator pair <A x X'> +- <A x Z'>
/// (minus for Z-type generators), the same decomposition that gives the CHSH
/// operator its 2*sqrt(2) value on a Bell pair. Every state in the code space
/// returns exactly 4*sqrt(2), which is also the spectral norm of the summed
/// operator; the code space is its top eigenspace.
inline double rotated_generator_sum(const StateVector& state) {
  require(state.num_qubits() == 5, "rotated_generator_sum: need a 5-qubit state");
  const char* gens[4] = {"IXZZX", "XIXZZ", "ZXIXZ", "ZZXIX"};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  double total = 0;
  for (const char* g : gens) {
    std::string base(g);
    char fifth = base[4];
    // Head on qubits 0..3, fifth factor replaced by X and by Z.
    auto with_fifth = [&](char c) {
      std::string lab = base.substr(0, 4) + c;
      return PauliOperator::from_label(lab);
    };
    double ex = with_fifth('X').expectation(state).real();
    double ez = with_fifth('Z').expectation(state).real();
    double xp = (ex + ez) * inv_sqrt2;  // <A x X'>
    double zp = (ex - ez) * inv_sqrt2;  // <A x Z'>
    total += fifth == 'X' ? xp + zp : xp - zp;
  }
  return total;
}

}  // namespace veriq

#endif  // VERIQ_CODES_STABILIZER_CODE_HPP
