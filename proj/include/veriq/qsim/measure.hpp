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

#ifndef VERIQ_QSIM_MEASURE_HPP
#define VERIQ_QSIM_MEASURE_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "veriq/core/rng.hpp"
#include "veriq/qsim/gates.hpp"
#include "veriq/qsim/state_vector.hpp"

namespace veriq {

/// Result of a projective measurement: sampled outcome label, its Born
/// probability in the pre-measurement state and the renormalized post state.
struct MeasurementRecord {
  std::int64_t outcome = 0;
  double probability = 0.0;
  StateVector post_state;
};

/// Measures `targets` in the computational basis. The outcome packs the
/// sampled bit of targets[i] into bit i.
inline MeasurementRecord measure_computational(const StateVector& state,
                                               std::span<const int> targets, Rng& rng) {
  std::uint64_t tmask = 0;
  for (int t : targets) {
    require(t >= 0 && t < state.num_qubits(), "measure: target out of range");
    tmask |= std::uint64_t{1} << t;
  }
  const std::uint64_t dim = state.dim();
  const int k = static_cast<int>(targets.size());
  std::vector<double> probs(dim_of(k), 0.0);
  for (std::uint64_t i = 0; i < dim; ++i) {
    double w = std::norm(state.amplitudes()(i));
    if (w == 0.0) continue;
    std::uint64_t o = 0;
    for (int b = 0; b < k; ++b)
      if (i >> targets[b] & 1) o |= std::uint64_t{1} << b;
    probs[o] += w;
  }
  double r = rng.uniform();
  std::uint64_t outcome = 0;
  double acc = 0;
  for (std::uint64_t o = 0; o < probs.size(); ++o) {
    acc += probs[o];
    if (r < acc || o + 1 == probs.size()) {
      outcome = o;
      break;
    }
  }
  double p = probs[outcome];
  Vec post = Vec::Zero(dim);
  double inv = 1.0 / std::sqrt(p);
  for (std::uint64_t i = 0; i < dim; ++i) {
    std::uint64_t o = 0;
    for (int b = 0; b < k; ++b)
      if (i >> targets[b] & 1) o |= std::uint64_t{1} << b;
    if (o == outcome) post(i) = state.amplitudes()(i) * inv;
  }
  return {static_cast<std::int64_t>(outcome), p,
          StateVector::unchecked(state.num_qubits(), std::move(post))};
}

inline MeasurementRecord measure_computational(const StateVector& state,
                                               std::initializer_list<int> targets, Rng& rng) {
  return measure_computational(state, std::span<const int>(targets.begin(), targets.size()),
                               rng);
}

/// Projects onto `projector` (acting on `targets`) with probability given by
/// the Born rule; returns the probability without sampling.
inline double projection_probability(const StateVector& state, const Mat& projector,
                                     std::span<const int> targets) {
  StateVector tmp = StateVector::unchecked(
      state.num_qubits(), Vec(state.amplitudes()));  // copy
  // projector need not be unitary; apply manually.
  Mat full = embed_operator(state.num_qubits(), projector, targets);
  Vec v = full * state.amplitudes();
  (void)tmp;
  return v.squaredNorm();
}

/// XY-plane measurement of one qubit in the basis {|+_phi>, |-_phi>}.
/// Outcome 0 projects onto |+_phi>, outcome 1 onto |-_phi>.
inline MeasurementRecord measure_xy(const StateVector& state, int target, Angle phi,
                                    Rng& rng) {
  require(target >= 0 && target < state.num_qubits(), "measure_xy: target out of range");
  const std::uint64_t dim = state.dim();
  const std::uint64_t bit = std::uint64_t{1} << target;
  const cx e = std::polar(1.0, -phi.radians());  // <+_phi| has conj(e^{i phi}) on |1>
  const double s = 1.0 / std::sqrt(2.0);

  // Amplitudes after projecting onto |+_phi> or |-_phi> (unnormalized, on the
  // full register with the target collapsed in place).
  Vec plus = Vec::Zero(dim), minus = Vec::Zero(dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    cx a0 = state.amplitudes()(i);
    cx a1 = state.amplitudes()(i | bit);
    cx cp = s * (a0 + e * a1);  // <+_phi| component
    cx cm = s * (a0 - e * a1);
    // Post state leaves the target in the projected basis state.
    plus(i) = cp * s;
    plus(i | bit) = cp * s * std::polar(1.0, phi.radians());
    minus(i) = cm * s;
    minus(i | bit) = -cm * s * std::polar(1.0, phi.radians());
  }
  double p0 = plus.squaredNorm();
  double p1 = minus.squaredNorm();
  int outcome = rng.uniform() < p0 ? 0 : 1;
  Vec& sel = outcome == 0 ? plus : minus;
  double p = outcome == 0 ? p0 : p1;
  sel /= std::sqrt(p);
  (void)p1;
  return {outcome, p, StateVector::unchecked(state.num_qubits(), std::move(sel))};
}

/// Measures a hermitian observable on the given targets. The outcome is the
/// index into `eigenvalues` of the sampled eigenvalue; the record's
/// `eigenvalue` convenience field is returned through `out_value` when given.
/// Degenerate eigenvalues (within 1e-9) are pooled into one outcome.
struct ObservableRecord {
  double eigenvalue = 0.0;
  double probability = 0.0;
  StateVector post_state;
};

inline ObservableRecord measure_observable(const StateVector& state, const Mat& observable,
                                           std::span<const int> targets, Rng& rng) {
  require(gates::is_hermitian(observable), "measure_observable: observable not hermitian");
  require(observable.rows() == static_cast<Eigen::Index>(dim_of(targets.size())),
          "measure_observable: arity mismatch");
  Eigen::SelfAdjointEigenSolver<Mat> es(observable);
  const auto& evals = es.eigenvalues();
  const Mat& evecs = es.eigenvectors();
  Mat full_vecs = Mat::Identity(1, 1);

  // Pool eigenvalues into degenerate groups.
  std::vector<std::pair<double, std::vector<int>>> groups;
  for (int i = 0; i < evals.size(); ++i) {
    if (!groups.empty() && std::abs(groups.back().first - evals(i)) < 1e-9) {
      groups.back().second.push_back(i);
    } else {
      groups.push_back({evals(i), {i}});
    }
  }
  (void)full_vecs;

  std::vector<double> probs(groups.size());
  std::vector<Vec> posts(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    Mat proj = Mat::Zero(observable.rows(), observable.cols());
    for (int i : groups[g].second) proj += evecs.col(i) * evecs.col(i).adjoint();
    Mat full = embed_operator(state.num_qubits(), proj, targets);
    posts[g] = full * state.amplitudes();
    probs[g] = posts[g].squaredNorm();
  }
  double r = rng.uniform();
  std::size_t pick = groups.size() - 1;
  double acc = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    acc += probs[g];
    if (r < acc) {
      pick = g;
      break;
    }
  }
  Vec post = posts[pick] / std::sqrt(probs[pick]);
  return {groups[pick].first, probs[pick],
          StateVector::unchecked(state.num_qubits(), std::move(post))};
}

inline ObservableRecord measure_observable(const StateVector& state, const Mat& observable,
                                           std::initializer_list<int> targets, Rng& rng) {
  return measure_observable(state, observable,
                            std::span<const int>(targets.begin(), targets.size()), rng);
}

}  // namespace veriq

#endif  // VERIQ_QSIM_MEASURE_HPP
