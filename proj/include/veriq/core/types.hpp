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

#ifndef VERIQ_CORE_TYPES_HPP
#define VERIQ_CORE_TYPES_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace veriq {

using cx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;

// Default size caps. Requests beyond these are hard errors: the library is a
// desk-scale laboratory, not a large-scale simulator.
inline constexpr int kMaxStateQubits = 18;
inline constexpr int kMaxDensityQubits = 8;

inline std::uint64_t dim_of(int num_qubits) {
  return std::uint64_t{1} << num_qubits;
}

// Thrown when a documented precondition is violated.
struct contract_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw contract_error(what);
}

}  // namespace veriq

#endif  // VERIQ_CORE_TYPES_HPP
