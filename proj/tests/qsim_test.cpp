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

#include <cmath>

#include "gtest/gtest.h"
#include "veriq/pauli/pauli_operator.hpp"
#include "veriq/qsim/density_matrix.hpp"
#include "veriq/qsim/gates.hpp"
#include "veriq/qsim/measure.hpp"
#include "veriq/qsim/qudit_register.hpp"
#include "veriq/qsim/state_vector.hpp"

using namespace veriq;

namespace {

StateVector bell_pair() {
  StateVector s = StateVector::zero(2);
  s = apply_unitary(s, gates::H(), {0});
  s = apply_unitary(s, gates::CNOT(), {0, 1});
  return s;
}

TEST(StateVector, HOnZeroGivesPlus) {
  StateVector s = apply_unitary(StateVector::zero(1), gates::H(), {0});
  EXPECT_NEAR(std::abs(s.amplitude(0) - cx(1 / std::sqrt(2.0), 0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitude(1) - cx(1 / std::sqrt(2.0), 0)), 0.0, 1e-12);
  EXPECT_NEAR(s.fidelity(StateVector::plus_theta(Angle(0))), 1.0, 1e-12);
}

TEST(StateVector, CzOnPlusTensorZeroCreatesNoEntanglement) {
  StateVector in = StateVector::plus_theta(Angle(0)).tensor(StateVector::zero(1));
  StateVector out = apply_unitary(in, gates::CZ(), {0, 1});
  EXPECT_NEAR(out.fidelity(in), 1.0, 1e-12);
}

TEST(StateVector, TGateCommutationUpToGlobalPhase) {
  // T X on |0> vs X S T on |0> agree up to an overall phase.
  StateVector a = apply_unitary(StateVector::zero(1), gates::X(), {0});
  a = apply_unitary(a, gates::T(), {0});
  StateVector b = apply_unitary(StateVector::zero(1), gates::T(), {0});
  b = apply_unitary(b, gates::S(), {0});
  b = apply_unitary(b, gates::X(), {0});
  EXPECT_NEAR(a.fidelity(b), 1.0, 1e-12);
}

TEST(StateVector, RejectsNonUnitary) {
  Mat bad = Mat::Ones(2, 2);
  EXPECT_THROW(apply_unitary(StateVector::zero(1), bad, {0}), contract_error);
  EXPECT_THROW(apply_unitary(StateVector::zero(1), gates::X(), {3}), contract_error);
  EXPECT_THROW(apply_unitary(StateVector::zero(2), gates::CNOT(), {0, 0}), contract_error);
}

TEST(StateVector, QubitCapEnforced) {
  EXPECT_THROW(StateVector::zero(19), contract_error);
}

TEST(Measure, DeterministicOne) {
  Rng rng(7);
  StateVector one = StateVector::computational(1, 1);
  auto rec = measure_computational(one, {0}, rng);
  EXPECT_EQ(rec.outcome, 1);
  EXPECT_NEAR(rec.probability, 1.0, 1e-12);
}

TEST(Measure, PlusHasHalfProbability) {
  Rng rng(3);
  StateVector plus = StateVector::plus_theta(Angle(0));
  auto rec = measure_computational(plus, {0}, rng);
  EXPECT_TRUE(rec.outcome == 0 || rec.outcome == 1);
  EXPECT_NEAR(rec.probability, 0.5, 1e-12);
}

TEST(Measure, BellCollapse) {
  Rng rng(11);
  for (int trial = 0; trial < 16; ++trial) {
    auto rec = measure_computational(bell_pair(), {0}, rng);
    StateVector expect =
        StateVector::computational(2, rec.outcome == 0 ? 0b00 : 0b11);
    EXPECT_NEAR(rec.post_state.fidelity(expect), 1.0, 1e-12);
  }
}

TEST(Measure, BornFrequencies) {
  // Empirical frequencies over 1e5 seeded samples match the probability field
  // within 4 standard errors.
  Rng rng(2026);
  const int n = 100000;
  StateVector psi = apply_unitary(StateVector::zero(1), gates::T(), {0});
  psi = apply_unitary(psi, gates::H(), {0});
  Rng probe(1);
  double p1 = 0;
  {
    auto rec = measure_computational(psi, {0}, probe);
    p1 = rec.outcome == 1 ? rec.probability : 1 - rec.probability;
  }
  int ones = 0;
  for (int i = 0; i < n; ++i) {
    auto rec = measure_computational(psi, {0}, rng);
    ones += rec.outcome;
  }
  double se = std::sqrt(p1 * (1 - p1) / n);
  EXPECT_NEAR(static_cast<double>(ones) / n, p1, 4 * se);
}

TEST(MeasureXY, PreparationAngleIsDeterministic) {
  Rng rng(5);
  for (int t = 0; t < 8; ++t) {
    StateVector s = StateVector::plus_theta(Angle(t));
    auto rec = measure_xy(s, 0, Angle(t), rng);
    EXPECT_EQ(rec.outcome, 0);
    EXPECT_NEAR(rec.probability, 1.0, 1e-12);
    auto rec2 = measure_xy(StateVector::minus_theta(Angle(t)), 0, Angle(t), rng);
    EXPECT_EQ(rec2.outcome, 1);
    EXPECT_NEAR(rec2.probability, 1.0, 1e-12);
  }
}

TEST(MeasureXY, CosineLaw) {
  Rng rng(5);
  // |+_0> measured at phi = pi/2: p(0) = cos^2(pi/4) = 1/2.
  auto rec = measure_xy(StateVector::plus_theta(Angle(0)), 0, Angle(2), rng);
  EXPECT_NEAR(rec.outcome == 0 ? rec.probability : 1 - rec.probability, 0.5, 1e-12);
  // General angles: p(0) = cos^2((phi - theta)/2).
  for (int theta = 0; theta < 8; ++theta)
    for (int phi = 0; phi < 8; ++phi) {
      auto r = measure_xy(StateVector::plus_theta(Angle(theta)), 0, Angle(phi), rng);
      double p0 = r.outcome == 0 ? r.probability : 1 - r.probability;
      double want = std::pow(std::cos((Angle(phi).radians() - Angle(theta).radians()) / 2), 2);
      EXPECT_NEAR(p0, want, 1e-12);
    }
}

TEST(MeasureObservable, PauliDeterministic) {
  Rng rng(9);
  auto rec = measure_observable(StateVector::zero(1), gates::Z(), {0}, rng);
  EXPECT_NEAR(rec.eigenvalue, 1.0, 1e-9);
  EXPECT_NEAR(rec.probability, 1.0, 1e-12);

  auto xx = measure_observable(bell_pair(), PauliOperator::from_label("XX").matrix(),
                               {0, 1}, rng);
  EXPECT_NEAR(xx.eigenvalue, 1.0, 1e-9);
  EXPECT_NEAR(xx.probability, 1.0, 1e-12);
}

TEST(MeasureObservable, DiagonalizedRotation) {
  // (X+Z)/sqrt(2) on |0>: +1 with probability cos^2(pi/8).
  Rng rng(21);
  Mat obs = (gates::X() + gates::Z()) / std::sqrt(2.0);
  int plus = 0;
  const int n = 20000;
  double want = std::pow(std::cos(kPi / 8), 2);
  for (int i = 0; i < n; ++i) {
    auto rec = measure_observable(StateVector::zero(1), obs, {0}, rng);
    if (rec.eigenvalue > 0) {
      plus++;
      EXPECT_NEAR(rec.probability, want, 1e-12);
    }
  }
  double se = std::sqrt(want * (1 - want) / n);
  EXPECT_NEAR(static_cast<double>(plus) / n, want, 4 * se);
}

TEST(MeasureObservable, RejectsNonHermitian) {
  Rng rng(1);
  Mat bad(2, 2);
  bad << 0, 1, 0, 0;
  EXPECT_THROW(measure_observable(StateVector::zero(1), bad, {0}, rng), contract_error);
}

TEST(DensityMatrix, PartialTraceOfBellIsMixed) {
  DensityMatrix rho = DensityMatrix::from_state(bell_pair());
  for (int keep = 0; keep < 2; ++keep) {
    DensityMatrix red = partial_trace(rho, {keep});
    EXPECT_NEAR(trace_distance(red, DensityMatrix::maximally_mixed(1)), 0.0, 1e-12);
  }
}

TEST(DensityMatrix, PartialTraceOfProduct) {
  Rng rng(4);
  StateVector a = apply_unitary(StateVector::zero(1), gates::T(), {0});
  a = apply_unitary(a, gates::H(), {0});
  StateVector b = StateVector::plus_theta(Angle(3));
  DensityMatrix rho = DensityMatrix::from_state(a.tensor(b));
  DensityMatrix red = partial_trace(rho, {0});
  EXPECT_NEAR(trace_distance(red, DensityMatrix::from_state(a)), 0.0, 1e-10);
  // Keeping everything returns the input unchanged.
  DensityMatrix full = partial_trace(rho, {0, 1});
  EXPECT_NEAR(trace_distance(full, rho), 0.0, 1e-12);
}

TEST(DensityMatrix, PartialTraceRejectsEmptyKeep) {
  DensityMatrix rho = DensityMatrix::maximally_mixed(1);
  EXPECT_THROW(partial_trace(rho, std::span<const int>{}), contract_error);
}

TEST(TraceDistance, KnownValues) {
  DensityMatrix zero = DensityMatrix::from_state(StateVector::zero(1));
  DensityMatrix one = DensityMatrix::from_state(StateVector::computational(1, 1));
  DensityMatrix plus = DensityMatrix::from_state(StateVector::plus_theta(Angle(0)));
  EXPECT_NEAR(trace_distance(zero, zero), 0.0, 1e-12);
  EXPECT_NEAR(trace_distance(zero, one), 1.0, 1e-12);
  EXPECT_NEAR(trace_distance(zero, plus), 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(TraceDistance, IsAMetric) {
  Rng rng(17);
  auto random_density = [&](int n) {
    // Random mixture of a few pure states.
    Mat acc = Mat::Zero(dim_of(n), dim_of(n));
    double wsum = 0;
    for (int i = 0; i < 3; ++i) {
      Vec v(dim_of(n));
      for (int j = 0; j < v.size(); ++j) v(j) = cx(rng.uniform() - 0.5, rng.uniform() - 0.5);
      v.normalize();
      double w = rng.uniform() + 0.1;
      acc += w * (v * v.adjoint());
      wsum += w;
    }
    return DensityMatrix(n, acc / wsum, false);
  };
  for (int rep = 0; rep < 20; ++rep) {
    DensityMatrix a = random_density(2), b = random_density(2), c = random_density(2);
    double ab = trace_distance(a, b);
    double ba = trace_distance(b, a);
    double ac = trace_distance(a, c);
    double cb = trace_distance(c, b);
    EXPECT_EQ(ab, ba);
    EXPECT_LE(ab, ac + cb + 1e-9);
    EXPECT_GE(ab, -1e-15);
    EXPECT_LE(ab, 1.0 + 1e-12);
  }
}

TEST(NormPreservation, RandomGateSequences) {
  Rng rng(23);
  std::vector<Mat> pool = {gates::H(), gates::S(), gates::T(), gates::X(), gates::Z()};
  for (int rep = 0; rep < 10; ++rep) {
    int n = 2 + static_cast<int>(rng.uniform_int(5));  // up to 6 qubits
    StateVector s = StateVector::zero(n);
    for (int step = 0; step < 60; ++step) {
      if (rng.bernoulli(0.3) && n >= 2) {
        int a = static_cast<int>(rng.uniform_int(n));
        int b = static_cast<int>(rng.uniform_int(n - 1));
        if (b >= a) b++;
        s = apply_unitary(s, rng.bernoulli(0.5) ? gates::CNOT() : gates::CZ(), {a, b});
      } else {
        int a = static_cast<int>(rng.uniform_int(n));
        s = apply_unitary(s, pool[rng.uniform_int(pool.size())], {a});
      }
    }
    EXPECT_LT(s.norm_error(), 1e-9);
  }
}

TEST(QuditRegister, BasisAndMeasure) {
  Rng rng(2);
  auto reg = QuditRegister::basis(5, 3, {2, 0, 4});
  auto digits = reg.measure_all(rng);
  EXPECT_EQ(digits, (std::vector<int>{2, 0, 4}));
  EXPECT_THROW(QuditRegister::basis(4, 1, {0}), contract_error);  // q must be prime
}

}  // namespace
