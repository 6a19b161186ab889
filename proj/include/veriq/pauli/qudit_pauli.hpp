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

#ifndef VERIQ_PAULI_QUDIT_PAULI_HPP
#define VERIQ_PAULI_QUDIT_PAULI_HPP

#include <vector>

#include "veriq/qsim/qudit_register.hpp"

namespace veriq {

/// Generalized Pauli on t qudits of prime dimension q:
/// omega^phase * prod_j X_j^{a_j} Z_j^{b_j}, with X|m> = |m+1 mod q>,
/// Z|m> = omega^m |m>, omega = exp(2 pi i / q). Only prime q is supported.
class QuditPauli {
 public:
  QuditPauli(int q, std::vector<int> x_powers, std::vector<int> z_powers, int phase = 0)
      : q_(q), x_(std::move(x_powers)), z_(std::move(z_powers)), phase_(((phase % q) + q) % q) {
    require(is_prime(q) && q >= 3, "QuditPauli: q must be prime >= 3");
    require(x_.size() == z_.size(), "QuditPauli: power vector length mismatch");
    for (auto& v : x_) v = ((v % q) + q) % q;
    for (auto& v : z_) v = ((v % q) + q) % q;
  }

  static QuditPauli identity(int q, int t) {
    return QuditPauli(q, std::vector<int>(t, 0), std::vector<int>(t, 0));
  }

  int q() const { return q_; }
  int num_qudits() const { return static_cast<int>(x_.size()); }
  const std::vector<int>& x_powers() const { return x_; }
  const std::vector<int>& z_powers() const { return z_; }
  int phase() const { return phase_; }

  bool is_identity_up_to_phase() const {
    for (std::size_t j = 0; j < x_.size(); ++j)
      if (x_[j] != 0 || z_[j] != 0) return false;
    return true;
  }

  QuditPauli operator*(const QuditPauli& o) const {
    require(q_ == o.q_ && x_.size() == o.x_.size(), "QuditPauli multiply: shape mismatch");
    std::vector<int> x(x_.size()), z(z_.size());
    int phase = phase_ + o.phase_;
    for (std::size_t j = 0; j < x_.size(); ++j) {
      // Z^b X^a = omega^{ab} X^a Z^b
      phase += z_[j] * o.x_[j];
      x[j] = (x_[j] + o.x_[j]) % q_;
      z[j] = (z_[j] + o.z_[j]) % q_;
    }
    return QuditPauli(q_, std::move(x), std::move(z), phase);
  }

  QuditRegister apply(const QuditRegister& reg) const {
    require(reg.q() == q_ && reg.num_qudits() == num_qudits(), "QuditPauli apply: shape mismatch");
    const std::uint64_t dim = reg.dim();
    Vec out = Vec::Zero(dim);
    // Precompute strides.
    std::vector<std::uint64_t> stride(num_qudits());
    std::uint64_t mul = 1;
    for (int j = 0; j < num_qudits(); ++j) {
      stride[j] = mul;
      mul *= q_;
    }
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
      cx v = reg.amplitudes()(idx);
      if (v == cx(0, 0)) continue;
      int ph = phase_;
      std::uint64_t tgt = 0;
      for (int j = 0; j < num_qudits(); ++j) {
        int m = static_cast<int>(idx / stride[j] % q_);
        ph = (ph + z_[j] * m) % q_;
        int shifted = (m + x_[j]) % q_;
        tgt += static_cast<std::uint64_t>(shifted) * stride[j];
      }
      out(tgt) += std::polar(1.0, 2.0 * kPi * ph / q_) * v;
    }
    return QuditRegister::unchecked(q_, num_qudits(), std::move(out));
  }

 private:
  int q_;
  std::vector<int> x_;
  std::vector<int> z_;
  int phase_;
};

}  // namespace veriq

#endif  // VERIQ_PAULI_QUDIT_PAULI_HPP
