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

#ifndef VERIQ_QSIM_QUDIT_REGISTER_HPP
#define VERIQ_QSIM_QUDIT_REGISTER_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "veriq/core/rng.hpp"
#include "veriq/core/types.hpp"

namespace veriq {

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

/// Register of `num_qudits` qudits of prime dimension q. The amplitude index
/// encodes qudit j as the j-th base-q digit (digit 0 least significant).
class QuditRegister {
 public:
  QuditRegister(int q, int num_qudits, Vec amps) : q_(q), t_(num_qudits), amps_(std::move(amps)) {
    require(is_prime(q) && q >= 3, "QuditRegister: dimension must be a prime >= 3");
    std::uint64_t d = 1;
    for (int i = 0; i < t_; ++i) d *= q;
    require(amps_.size() == static_cast<Eigen::Index>(d), "QuditRegister: wrong length");
    require(std::abs(amps_.squaredNorm() - 1.0) < 1e-10, "QuditRegister: not normalized");
  }

  static QuditRegister basis(int q, int num_qudits, const std::vector<int>& digits) {
    std::uint64_t d = 1;
    for (int i = 0; i < num_qudits; ++i) d *= q;
    Vec v = Vec::Zero(d);
    std::uint64_t idx = 0, mul = 1;
    for (int i = 0; i < num_qudits; ++i) {
      idx += static_cast<std::uint64_t>(((digits[i] % q) + q) % q) * mul;
      mul *= q;
    }
    v(idx) = 1.0;
    return QuditRegister(q, num_qudits, std::move(v));
  }

  int q() const { return q_; }
  int num_qudits() const { return t_; }
  std::uint64_t dim() const { return static_cast<std::uint64_t>(amps_.size()); }
  const Vec& amplitudes() const { return amps_; }

  int digit(std::uint64_t index, int pos) const {
    std::uint64_t mul = 1;
    for (int i = 0; i < pos; ++i) mul *= q_;
    return static_cast<int>(index / mul % q_);
  }

  cx inner(const QuditRegister& other) const {
    require(q_ == other.q_ && t_ == other.t_, "inner: shape mismatch");
    return amps_.dot(other.amps_);
  }

  /// Measures all qudits in the computational basis; returns the digit string.
  std::vector<int> measure_all(Rng& rng) const {
    double r = rng.uniform(), acc = 0;
    std::uint64_t pick = dim() - 1;
    for (std::uint64_t i = 0; i < dim(); ++i) {
      acc += std::norm(amps_(i));
      if (r < acc) {
        pick = i;
        break;
      }
    }
    std::vector<int> digits(t_);
    for (int j = 0; j < t_; ++j) digits[j] = digit(pick, j);
    return digits;
  }

  static QuditRegister unchecked(int q, int t, Vec amps) {
    QuditRegister r(q, t, Vec::Zero(0), Tag{});
    r.amps_ = std::move(amps);
    return r;
  }

 private:
  struct Tag {};
  QuditRegister(int q, int t, Vec amps, Tag) : q_(q), t_(t), amps_(std::move(amps)) {}
  int q_;
  int t_;
  Vec amps_;
};

}  // namespace veriq

#endif  // VERIQ_QSIM_QUDIT_REGISTER_HPP
