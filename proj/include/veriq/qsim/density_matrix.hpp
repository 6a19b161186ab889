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

#ifndef VERIQ_QSIM_DENSITY_MATRIX_HPP
#define VERIQ_QSIM_DENSITY_MATRIX_HPP

#include <cmath>
#include <span>
#include <vector>

#include "veriq/qsim/state_vector.hpp"

namespace veriq {

/// Dense mixed state. Capped at kMaxDensityQubits.
class DensityMatrix {
 public:
  DensityMatrix(int num_qubits, Mat m, bool validate = true)
      : num_qubits_(num_qubits), m_(std::move(m)) {
    require(num_qubits >= 0 && num_qubits <= kMaxDensityQubits,
            "DensityMatrix: qubit count exceeds cap");
    require(m_.rows() == m_.cols() &&
                m_.rows() == static_cast<Eigen::Index>(dim_of(num_qubits)),
            "DensityMatrix: wrong dimension");
    if (validate) {
      require((m_ - m_.adjoint()).cwiseAbs().maxCoeff() < 1e-10,
              "DensityMatrix: not hermitian");
      require(std::abs(m_.trace().real() - 1.0) < 1e-10 &&
                  std::abs(m_.trace().imag()) < 1e-10,
              "DensityMatrix: trace != 1");
      Eigen::SelfAdjointEigenSolver<Mat> es(m_);
      require(es.eigenvalues().minCoeff() > -1e-9, "DensityMatrix: negative eigenvalue");
    }
  }

  static DensityMatrix from_state(const StateVector& psi) {
    return DensityMatrix(psi.num_qubits(),
                         psi.amplitudes() * psi.amplitudes().adjoint(), false);
  }

  static DensityMatrix maximally_mixed(int num_qubits) {
    auto d = dim_of(num_qubits);
    return DensityMatrix(num_qubits, Mat::Identity(d, d) / static_cast<double>(d), false);
  }

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dim() const { return dim_of(num_qubits_); }
  const Mat& matrix() const { return m_; }

  double expectation(const Mat& observable) const {
    return (observable * m_).trace().real();
  }

 private:
  int num_qubits_;
  Mat m_;
};

/// Reduced density matrix on the `keep` qubits. The kept qubits are reindexed
/// in the order given (keep[i] becomes qubit i of the result).
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  require(!keep.empty(), "partial_trace: empty keep set would be a scalar trace");
  std::uint64_t kmask = 0;
  for (int q : keep) {
    require(q >= 0 && q < rho.num_qubits(), "partial_trace: index out of range");
    kmask |= std::uint64_t{1} << q;
  }
  const int nk = static_cast<int>(keep.size());
  std::vector<int> traced;
  for (int q = 0; q < rho.num_qubits(); ++q)
    if (!(kmask >> q & 1)) traced.push_back(q);

  const std::uint64_t dk = dim_of(nk);
  Mat out = Mat::Zero(dk, dk);
  auto expand = [&](std::uint64_t kept_bits, std::uint64_t traced_bits) {
    std::uint64_t idx = 0;
    for (int i = 0; i < nk; ++i)
      if (kept_bits >> i & 1) idx |= std::uint64_t{1} << keep[i];
    for (std::size_t i = 0; i < traced.size(); ++i)
      if (traced_bits >> i & 1) idx |= std::uint64_t{1} << traced[i];
    return idx;
  };
  const std::uint64_t dt = dim_of(static_cast<int>(traced.size()));
  for (std::uint64_t r = 0; r < dk; ++r)
    for (std::uint64_t c = 0; c < dk; ++c) {
      cx acc = 0;
      for (std::uint64_t t = 0; t < dt; ++t)
        acc += rho.matrix()(expand(r, t), expand(c, t));
      out(r, c) = acc;
    }
  return DensityMatrix(static_cast<int>(keep.size()), std::move(out), false);
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

/// Trace distance (1/2)*Tr sqrt((a-b)^2) via eigenvalue absolute sum.
inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  require(a.num_qubits() == b.num_qubits(), "trace_distance: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Mat> es(a.matrix() - b.matrix());
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

/// Trace norm of an arbitrary hermitian operator difference; used where the
/// operands are subnormalized blocks rather than full density matrices.
inline double trace_norm_hermitian(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  return es.eigenvalues().cwiseAbs().sum();
}

}  // namespace veriq

#endif  // VERIQ_QSIM_DENSITY_MATRIX_HPP
