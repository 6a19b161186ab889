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

#include "gtest/gtest.h"
#include "veriq/circuit/circuit.hpp"

using namespace veriq;

namespace {

TEST(Circuit, ParseRoundTrip) {
  Circuit c = Circuit::parse(3, "H 0\nCNOT 0 1\nT 2\n# comment\nCZ 1 2\n");
  EXPECT_EQ(c.size(), 4u);
  Circuit c2 = Circuit::parse(3, c.str());
  EXPECT_EQ(c.str(), c2.str());
}

TEST(Circuit, ParseRejectsBadInput) {
  EXPECT_THROW(Circuit::parse(2, "FOO 0\n"), contract_error);
  EXPECT_THROW(Circuit::parse(2, "H 5\n"), contract_error);
  EXPECT_THROW(Circuit::parse(2, "CNOT 0 0\n"), contract_error);
  EXPECT_THROW(Circuit::parse(2, "CNOT 0\n"), contract_error);
}

TEST(Circuit, BellDistribution) {
  Circuit c = Circuit::parse(2, "H 0\nCNOT 0 1\n");
  auto probs = c.output_distribution(0);
  EXPECT_NEAR(probs[0b00], 0.5, 1e-12);
  EXPECT_NEAR(probs[0b11], 0.5, 1e-12);
  EXPECT_NEAR(probs[0b01], 0.0, 1e-12);
  EXPECT_NEAR(probs[0b10], 0.0, 1e-12);
}

TEST(Circuit, CliffordDetection) {
  EXPECT_TRUE(Circuit::parse(2, "H 0\nS 1\nCNOT 0 1\n").is_clifford());
  EXPECT_FALSE(Circuit::parse(2, "H 0\nT 1\n").is_clifford());
}

TEST(Circuit, CnotOnTen) {
  // CNOT with control set flips the target: |10> -> |11>.
  // Qubit 0 is the control; input bits pack qubit j at bit j.
  Circuit c(2, {{GateKind::CNOT, {0, 1}}});
  auto probs = c.output_distribution(0b01);  // qubit0 = 1
  EXPECT_NEAR(probs[0b11], 1.0, 1e-12);
}

}  // namespace
