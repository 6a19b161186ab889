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

#ifndef VERIQ_PAULI_CLIFFORD_HPP
#define VERIQ_PAULI_CLIFFORD_HPP

#include <queue>
#include <unordered_set>
#include <vector>

#include "veriq/core/rng.hpp"
#include "veriq/pauli/pauli_operator.hpp"
#include "veriq/qsim/gates.hpp"

namespace veriq {

enum class CliffordGateKind { H, S, Sdg, X, Y, Z, CNOT, CZ, SWAP };

struct CliffordGateOp {
  CliffordGateKind kind;
  int q0 = 0;
  int q1 = -1;  // second qubit for CNOT/CZ/SWAP
};

/// Clifford group element stored as a symplectic tableau with phase bits: the
/// conjugation images C X_i C^dag and C Z_i C^dag of every generator. Two
/// unitaries with the same tableau differ only by a global phase; tableau
/// equality is therefore equality modulo phase.
class CliffordElement {
 public:
  explicit CliffordElement(int num_qubits)
      : n_(num_qubits), image_x_(), image_z_() {
    require(num_qubits >= 1 && num_qubits <= 24, "CliffordElement: bad qubit count");
    for (int i = 0; i < n_; ++i) {
      image_x_.push_back(PauliOperator(n_, std::uint64_t{1} << i, 0));
      image_z_.push_back(PauliOperator(n_, 0, std::uint64_t{1} << i));
    }
  }

  static CliffordElement identity(int num_qubits) { return CliffordElement(num_qubits); }

  static CliffordElement from_gate(CliffordGateKind kind, int q0, int q1, int num_qubits) {
    CliffordElement c(num_qubits);
    auto X = [&](int q) { return PauliOperator(num_qubits, std::uint64_t{1} << q, 0); };
    auto Z = [&](int q) { return PauliOperator(num_qubits, 0, std::uint64_t{1} << q); };
    auto Y = [&](int q) {
      return PauliOperator(num_qubits, std::uint64_t{1} << q, std::uint64_t{1} << q, 1);
    };
    auto neg = [](PauliOperator p) { return p.with_phase_exp(p.phase_exp() + 2); };
    switch (kind) {
      case CliffordGateKind::H:
        c.image_x_[q0] = Z(q0);
        c.image_z_[q0] = X(q0);
        break;
      case CliffordGateKind::S:
        c.image_x_[q0] = Y(q0);
        break;
      case CliffordGateKind::Sdg:
        c.image_x_[q0] = neg(Y(q0));
        break;
      case CliffordGateKind::X:
        c.image_z_[q0] = neg(Z(q0));
        break;
      case CliffordGateKind::Y:
        c.image_x_[q0] = neg(X(q0));
        c.image_z_[q0] = neg(Z(q0));
        break;
      case CliffordGateKind::Z:
        c.image_x_[q0] = neg(X(q0));
        break;
      case CliffordGateKind::CNOT:
        require(q1 >= 0 && q1 != q0, "CNOT needs two distinct qubits");
        c.image_x_[q0] = X(q0) * X(q1);
        c.image_z_[q1] = Z(q0) * Z(q1);
        break;
      case CliffordGateKind::CZ:
        require(q1 >= 0 && q1 != q0, "CZ needs two distinct qubits");
        c.image_x_[q0] = X(q0) * Z(q1);
        c.image_x_[q1] = Z(q0) * X(q1);
        break;
      case CliffordGateKind::SWAP:
        require(q1 >= 0 && q1 != q0, "SWAP needs two distinct qubits");
        c.image_x_[q0] = X(q1);
        c.image_x_[q1] = X(q0);
        c.image_z_[q0] = Z(q1);
        c.image_z_[q1] = Z(q0);
        break;
    }
    return c;
  }

  static CliffordElement from_gate(const CliffordGateOp& op, int num_qubits) {
    return from_gate(op.kind, op.q0, op.q1, num_qubits);
  }

  int num_qubits() const { return n_; }
  const PauliOperator& image_x(int i) const { return image_x_[i]; }
  const PauliOperator& image_z(int i) const { return image_z_[i]; }

  /// C P C^dag, phase exact.
  PauliOperator conjugate(const PauliOperator& p) const {
    require(p.num_qubits() == n_, "conjugate: size mismatch");
    PauliOperator acc = PauliOperator(n_, 0, 0, p.phase_exp());
    for (int j = 0; j < n_; ++j) {
      if (p.x_mask() >> j & 1) acc = acc * image_x_[j];
      if (p.z_mask() >> j & 1) acc = acc * image_z_[j];
    }
    return acc;
  }

  /// Composition: first apply *this*, then `after`. (after * this as matrices.)
  CliffordElement then(const CliffordElement& after) const {
    require(n_ == after.n_, "then: size mismatch");
    CliffordElement out(n_);
    for (int i = 0; i < n_; ++i) {
      out.image_x_[i] = after.conjugate(image_x_[i]);
      out.image_z_[i] = after.conjugate(image_z_[i]);
    }
    return out;
  }

  CliffordElement then(const CliffordGateOp& op) const {
    return then(from_gate(op, n_));
  }

  bool operator==(const CliffordElement& o) const {
    return n_ == o.n_ && image_x_ == o.image_x_ && image_z_ == o.image_z_;
  }

  /// Gate sequence (temporal order) whose product equals this element up to
  /// global phase.
  std::vector<CliffordGateOp> synthesize() const;

  CliffordElement inverse() const;

  /// Dense unitary (a fixed representative of the global-phase class).
  Mat to_matrix() const;

 private:
  friend struct CliffordHash;
  int n_;
  std::vector<PauliOperator> image_x_;
  std::vector<PauliOperator> image_z_;
};

struct CliffordHash {
  std::size_t operator()(const CliffordElement& c) const {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    PauliHash ph;
    for (int i = 0; i < c.num_qubits(); ++i) {
      h = splitmix64(h ^ ph(c.image_x(i)));
      h = splitmix64(h ^ ph(c.image_z(i)));
    }
    return static_cast<std::size_t>(h);
  }
};

namespace detail {

/// Emits gates (in application order) whose combined conjugation maps
/// P -> +X_anchor and Q -> +Z_anchor. P must be non-identity, Q must
/// anticommute with P, and both must be hermitian and supported on
/// qubits >= anchor.
inline std::vector<CliffordGateOp> reduce_pair(int num_qubits, int anchor, PauliOperator p,
                                               PauliOperator q) {
  std::vector<CliffordGateOp> ops;
  auto emit = [&](CliffordGateKind kind, int a, int b = -1) {
    CliffordGateOp op{kind, a, b};
    CliffordElement g = CliffordElement::from_gate(op, num_qubits);
    p = g.conjugate(p);
    q = g.conjugate(q);
    ops.push_back(op);
  };

  require(!p.is_identity_up_to_phase(), "reduce_pair: P is identity");
  require(!p.commutes_with(q), "reduce_pair: P and Q must anticommute");

  // Make P pure-X on its support.
  for (int j = anchor; j < num_qubits; ++j) {
    bool x = p.x_mask() >> j & 1, z = p.z_mask() >> j & 1;
    if (x && z)
      emit(CliffordGateKind::S, j);  // Y -> -X
    else if (z)
      emit(CliffordGateKind::H, j);  // Z -> X
  }
  // Merge X support into the lowest qubit.
  int j0 = std::countr_zero(p.x_mask());
  for (int j = j0 + 1; j < num_qubits; ++j)
    if (p.x_mask() >> j & 1) emit(CliffordGateKind::CNOT, j0, j);
  if (j0 != anchor) emit(CliffordGateKind::SWAP, anchor, j0);
  // P == +-X_anchor now. Reduce Q's tail to Z-only, then fold into anchor.
  for (int j = anchor + 1; j < num_qubits; ++j) {
    bool x = q.x_mask() >> j & 1, z = q.z_mask() >> j & 1;
    if (x && z) {
      emit(CliffordGateKind::S, j);  // Y -> -X
      emit(CliffordGateKind::H, j);  // -X -> -Z
    } else if (x) {
      emit(CliffordGateKind::H, j);
    }
  }
  for (int j = anchor + 1; j < num_qubits; ++j)
    if (q.z_mask() >> j & 1) emit(CliffordGateKind::CNOT, j, anchor);
  // Q == +-(Z or Y)_anchor. H S H fixes X while mapping Y -> Z.
  if (q.x_mask() >> anchor & 1) {
    emit(CliffordGateKind::H, anchor);
    emit(CliffordGateKind::S, anchor);
    emit(CliffordGateKind::H, anchor);
  }
  if (p.phase_exp() == 2) emit(CliffordGateKind::Z, anchor);
  if (q.phase_exp() == 2) emit(CliffordGateKind::X, anchor);
  require(p == PauliOperator(num_qubits, std::uint64_t{1} << anchor, 0) &&
              q == PauliOperator(num_qubits, 0, std::uint64_t{1} << anchor),
          "reduce_pair: reduction failed");
  return ops;
}

inline CliffordGateOp inverted(const CliffordGateOp& op) {
  switch (op.kind) {
    case CliffordGateKind::S:
      return {CliffordGateKind::Sdg, op.q0, op.q1};
    case CliffordGateKind::Sdg:
      return {CliffordGateKind::S, op.q0, op.q1};
    default:
      return op;  // H, X, Y, Z, CNOT, CZ, SWAP are involutions
  }
}

}  // namespace detail

inline std::vector<CliffordGateOp> CliffordElement::synthesize() const {
  CliffordElement c = *this;
  std::vector<CliffordGateOp> reducing;
  for (int i = 0; i < n_; ++i) {
    auto ops = detail::reduce_pair(n_, i, c.image_x_[i], c.image_z_[i]);
    for (const auto& op : ops) c = c.then(op);
    reducing.insert(reducing.end(), ops.begin(), ops.end());
  }
  require(c == CliffordElement::identity(n_), "synthesize: reduction failed");
  // (g_m .. g_1) C = I  =>  C = g_1^-1 .. g_m^-1, i.e. the reversed inverted
  // sequence in temporal order.
  std::vector<CliffordGateOp> circuit;
  for (auto it = reducing.rbegin(); it != reducing.rend(); ++it)
    circuit.push_back(detail::inverted(*it));
  return circuit;
}

inline CliffordElement CliffordElement::inverse() const {
  CliffordElement c = *this;
  CliffordElement inv = CliffordElement::identity(n_);
  for (int i = 0; i < n_; ++i) {
    auto ops = detail::reduce_pair(n_, i, c.image_x_[i], c.image_z_[i]);
    for (const auto& op : ops) {
      c = c.then(op);
      inv = inv.then(op);
    }
  }
  return inv;
}

inline Mat clifford_gate_matrix(const CliffordGateOp& op, int num_qubits) {
  switch (op.kind) {
    case CliffordGateKind::H:
      return embed_operator(num_qubits, gates::H(), {op.q0});
    case CliffordGateKind::S:
      return embed_operator(num_qubits, gates::S(), {op.q0});
    case CliffordGateKind::Sdg:
      return embed_operator(num_qubits, gates::Sdg(), {op.q0});
    case CliffordGateKind::X:
      return embed_operator(num_qubits, gates::X(), {op.q0});
    case CliffordGateKind::Y:
      return embed_operator(num_qubits, gates::Y(), {op.q0});
    case CliffordGateKind::Z:
      return embed_operator(num_qubits, gates::Z(), {op.q0});
    case CliffordGateKind::CNOT:
      return embed_operator(num_qubits, gates::CNOT(), {op.q0, op.q1});
    case CliffordGateKind::CZ:
      return embed_operator(num_qubits, gates::CZ(), {op.q0, op.q1});
    case CliffordGateKind::SWAP:
      return embed_operator(num_qubits, gates::SWAP(), {op.q0, op.q1});
  }
  throw contract_error("unknown gate");
}

inline Mat CliffordElement::to_matrix() const {
  const std::uint64_t d = dim_of(n_);
  Mat m = Mat::Identity(d, d);
  for (const auto& op : synthesize()) m = clifford_gate_matrix(op, n_) * m;
  return m;
}

/// Complete duplicate-free enumeration of the Clifford group modulo global
/// phase; 24 elements for n=1, 11520 for n=2. Cached after the first call.
inline const std::vector<CliffordElement>& enumerate_cliffords(int n) {
  require(n == 1 || n == 2, "enumerate_cliffords: only n <= 2 supported");
  static const std::vector<CliffordElement> one = [] {
    std::vector<CliffordGateOp> gens = {{CliffordGateKind::H, 0}, {CliffordGateKind::S, 0}};
    std::vector<CliffordElement> out;
    std::unordered_set<CliffordElement, CliffordHash> seen;
    std::queue<CliffordElement> frontier;
    CliffordElement id(1);
    seen.insert(id);
    frontier.push(id);
    out.push_back(id);
    while (!frontier.empty()) {
      CliffordElement cur = frontier.front();
      frontier.pop();
      for (const auto& g : gens) {
        CliffordElement next = cur.then(CliffordElement::from_gate(g, 1));
        if (seen.insert(next).second) {
          out.push_back(next);
          frontier.push(next);
        }
      }
    }
    return out;
  }();
  static const std::vector<CliffordElement> two = [] {
    std::vector<CliffordGateOp> gens = {{CliffordGateKind::H, 0},
                                        {CliffordGateKind::H, 1},
                                        {CliffordGateKind::S, 0},
                                        {CliffordGateKind::S, 1},
                                        {CliffordGateKind::CNOT, 0, 1}};
    std::vector<CliffordElement> out;
    std::unordered_set<CliffordElement, CliffordHash> seen;
    std::queue<CliffordElement> frontier;
    CliffordElement id(2);
    seen.insert(id);
    frontier.push(id);
    out.push_back(id);
    while (!frontier.empty()) {
      CliffordElement cur = frontier.front();
      frontier.pop();
      for (const auto& g : gens) {
        CliffordElement next = cur.then(CliffordElement::from_gate(g, 2));
        if (seen.insert(next).second) {
          out.push_back(next);
          frontier.push(next);
        }
      }
    }
    return out;
  }();
  return n == 1 ? one : two;
}

/// Uniformly random Clifford element modulo global phase.
///
/// Stage i draws a uniformly random anticommuting hermitian pair (P, Q)
/// supported on qubits i..n-1 and takes the reduction W_i with
/// W_i P W_i^dag = X_i, W_i Q W_i^dag = Z_i. The element returned is
/// W_0^-1 W_1^-1 ... W_{n-1}^-1, which walks the group uniformly because the
/// image pair of (X_i, Z_i) determines the coset exactly. Uniformity is
/// validated against the exact enumeration for n <= 2 in the test suite.
inline CliffordElement random_clifford(int n, Rng& rng) {
  require(n >= 1 && n <= 6, "random_clifford: n out of range");
  std::vector<std::vector<CliffordGateOp>> reductions;
  for (int i = 0; i < n; ++i) {
    int m = n - i;
    std::uint64_t space = dim_of(m) * dim_of(m);  // 4^m mask pairs
    std::uint64_t pq = 1 + rng.uniform_int(space - 1);
    std::uint64_t px = (pq & (dim_of(m) - 1)) << i;
    std::uint64_t pz = (pq >> m) << i;
    PauliOperator p(n, px, pz, rng.bit() ? 2 : 0);
    PauliOperator q = p;
    do {
      std::uint64_t qq = rng.uniform_int(space);
      q = PauliOperator(n, (qq & (dim_of(m) - 1)) << i, (qq >> m) << i, rng.bit() ? 2 : 0);
    } while (p.commutes_with(q));
    // Hermitian representatives: flip i^1/i^3 phases produced by Y counts.
    if (!p.is_hermitian()) p = p.with_phase_exp(p.phase_exp() + 1);
    if (!q.is_hermitian()) q = q.with_phase_exp(q.phase_exp() + 1);
    reductions.push_back(detail::reduce_pair(n, i, p, q));
  }
  CliffordElement acc = CliffordElement::identity(n);
  for (int i = n - 1; i >= 0; --i) {
    // W_i^-1 composed after acc: acc := W_i^-1 * acc.
    CliffordElement w = CliffordElement::identity(n);
    for (const auto& op : reductions[i]) w = w.then(op);
    acc = acc.then(w.inverse());
  }
  return acc;
}

}  // namespace veriq

#endif  // VERIQ_PAULI_CLIFFORD_HPP
