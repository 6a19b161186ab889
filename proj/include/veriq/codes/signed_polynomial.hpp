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

#ifndef VERIQ_CODES_SIGNED_POLYNOMIAL_HPP
#define VERIQ_CODES_SIGNED_POLYNOMIAL_HPP

#include <cmath>
#include <vector>

#include "veriq/core/rng.hpp"
#include "veriq/pauli/qudit_pauli.hpp"
#include "veriq/qsim/qudit_register.hpp"

namespace veriq {

namespace detail {
inline std::vector<int> mod_negate(const std::vector<int>& v, int q) {
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = ((-v[i]) % q + q) % q;
  return out;
}
}  // namespace detail

/// Signed polynomial qudit code over F_q (q prime), block length t = 2d+1.
///
/// A logical value i in F_q is encoded as the equal superposition over all
/// polynomials p of degree <= d with p(0) = i of the basis states
/// |k_1 p(a_1)> ... |k_t p(a_t)>, where a_j are distinct nonzero evaluation
/// points and k in {-1,+1}^t is the sign key. The constraint convention
/// (the polynomial's value at zero carries the logical qudit) is fixed as
/// `kConstraintValueAtZero`; it is the standard polynomial-code convention
/// and the one under which the 2^-d authentication bound holds.
class SignedPolynomialCode {
 public:
  static constexpr const char* kConstraintValueAtZero = "p(0) = logical";

  SignedPolynomialCode(int q, int degree_bound, std::vector<int> sign_key,
                       std::vector<int> eval_points = {})
      : q_(q), d_(degree_bound), t_(2 * degree_bound + 1), k_(std::move(sign_key)),
        alpha_(std::move(eval_points)) {
    require(is_prime(q) && q >= 3, "SignedPolynomialCode: q must be prime >= 3");
    require(d_ >= 1, "SignedPolynomialCode: degree bound must be >= 1");
    require(q_ > t_, "SignedPolynomialCode: need q > t");
    if (alpha_.empty())
      for (int j = 1; j <= t_; ++j) alpha_.push_back(j);
    require(static_cast<int>(alpha_.size()) == t_, "SignedPolynomialCode: need t eval points");
    for (int a : alpha_) require(a % q_ != 0, "SignedPolynomialCode: eval points must be nonzero");
    for (std::size_t i = 0; i < alpha_.size(); ++i)
      for (std::size_t j = i + 1; j < alpha_.size(); ++j)
        require(alpha_[i] % q_ != alpha_[j] % q_, "SignedPolynomialCode: eval points must differ");
    require(static_cast<int>(k_.size()) == t_, "SignedPolynomialCode: sign key length != t");
    for (int s : k_) require(s == 1 || s == -1, "SignedPolynomialCode: sign key entries are +-1");
    double branches = std::pow(q_, d_);
    require(branches <= 125.0 + 0.5, "SignedPolynomialCode: q^d exceeds enumeration cap");
  }

  int q() const { return q_; }
  int degree_bound() const { return d_; }
  int block_length() const { return t_; }
  const std::vector<int>& sign_key() const { return k_; }
  const std::vector<int>& eval_points() const { return alpha_; }

  /// Encodes logical value i by explicit enumeration of the q^d polynomials.
  QuditRegister encode(int logical) const {
    require(logical >= 0 && logical < q_, "encode: invalid field element");
    std::uint64_t dim = 1;
    for (int j = 0; j < t_; ++j) dim *= q_;
    Vec v = Vec::Zero(dim);
    std::uint64_t branches = 1;
    for (int j = 0; j < d_; ++j) branches *= q_;
    for (std::uint64_t b = 0; b < branches; ++b) {
      std::vector<int> coeff(d_ + 1);
      coeff[0] = logical;
      std::uint64_t rest = b;
      for (int j = 1; j <= d_; ++j) {
        coeff[j] = static_cast<int>(rest % q_);
        rest /= q_;
      }
      std::uint64_t idx = 0, mul = 1;
      for (int j = 0; j < t_; ++j) {
        int digit = ((k_[j] * eval_poly(coeff, alpha_[j])) % q_ + q_) % q_;
        idx += static_cast<std::uint64_t>(digit) * mul;
        mul *= q_;
      }
      v(idx) += 1.0;
    }
    v /= std::sqrt(static_cast<double>(branches));
    return QuditRegister::unchecked(q_, t_, std::move(v));
  }

  /// All q logical codewords, in logical order.
  std::vector<QuditRegister> codewords() const {
    std::vector<QuditRegister> out;
    for (int i = 0; i < q_; ++i) out.push_back(encode(i));
    return out;
  }

 private:
  int eval_poly(const std::vector<int>& coeff, int x) const {
    long long acc = 0, pw = 1;
    for (int c : coeff) {
      acc = (acc + c * pw) % q_;
      pw = pw * x % q_;
    }
    return static_cast<int>(acc);
  }

  int q_;
  int d_;
  int t_;
  std::vector<int> k_;
  std::vector<int> alpha_;
};

enum class PadAveraging {
  /// The pad conjugation of a generalized Pauli attack is the same attack up
  /// to a global phase, so every projective statistic of the decoded state is
  /// identical across the whole pad group; the average is taken exactly by
  /// evaluating at the identity pad.
  Algebraic,
  /// Literal sum over all q^{2t} pads (used to validate the algebraic path).
  Enumerated,
};

struct AuthExperimentResult {
  double accept_and_incorrect = 0.0;  // averaged over sign keys (and pads)
  double worst_key = 0.0;             // max over sign keys of the per-key average
  std::uint64_t terms = 0;
};

/// Accept-and-incorrect probability of the signed-polynomial authentication
/// scheme under a fixed generalized-Pauli attack: encode with a sign key,
/// one-time pad with a qudit Pauli, apply the attack, unpad, decode, and
/// accept iff the flag qudits all read zero; "incorrect" additionally means
/// the decoded logical differs from the input. Exhaustive over all 2^t sign
/// keys.
inline AuthExperimentResult signed_poly_auth_experiment(
    int q, int degree_bound, const QuditPauli& attack, int logical = 1,
    PadAveraging pads = PadAveraging::Algebraic) {
  const int t = 2 * degree_bound + 1;
  require(attack.q() == q && attack.num_qudits() == t, "auth experiment: attack shape mismatch");
  std::uint64_t dim = 1;
  for (int j = 0; j < t; ++j) dim *= q;
  require(dim <= 125, "auth experiment: q^t exceeds the exhaustive cap");

  const std::uint64_t num_keys = std::uint64_t{1} << t;
  AuthExperimentResult res;
  double total = 0;
  for (std::uint64_t kb = 0; kb < num_keys; ++kb) {
    std::vector<int> key(t);
    for (int j = 0; j < t; ++j) key[j] = (kb >> j & 1) ? -1 : +1;
    SignedPolynomialCode code(q, degree_bound, key);
    auto words = code.codewords();
    const Vec& psi = words[logical].amplitudes();

    // accept-and-incorrect for the state (unpad . attack . pad)|psi>.
    auto probe = [&](const QuditPauli& pad) {
      QuditRegister state = QuditRegister::unchecked(q, t, psi);
      state = pad.apply(state);
      state = attack.apply(state);
      // (X^a Z^b)^dag = X^{-a} Z^{-b} up to a phase that cancels below.
      QuditPauli unpad(q, detail::mod_negate(pad.x_powers(), q),
                       detail::mod_negate(pad.z_powers(), q), 0);
      state = unpad.apply(state);
      const Vec& v = state.amplitudes();
      double p_accept = 0;
      for (const auto& w : words) p_accept += std::norm(w.amplitudes().dot(v));
      double p_correct = std::norm(psi.dot(v));
      return std::max(0.0, p_accept - p_correct);
    };

    double key_value;
    if (pads == PadAveraging::Algebraic) {
      key_value = probe(QuditPauli::identity(q, t));
      res.terms += 1;
    } else {
      std::uint64_t pad_count = dim * dim;
      double acc = 0;
      for (std::uint64_t pb = 0; pb < pad_count; ++pb) {
        std::vector<int> a(t), b(t);
        std::uint64_t rest = pb;
        for (int j = 0; j < t; ++j) {
          a[j] = static_cast<int>(rest % q);
          rest /= q;
        }
        for (int j = 0; j < t; ++j) {
          b[j] = static_cast<int>(rest % q);
          rest /= q;
        }
        acc += probe(QuditPauli(q, a, b));
      }
      key_value = acc / static_cast<double>(pad_count);
      res.terms += pad_count;
    }
    res.worst_key = std::max(res.worst_key, key_value);
    total += key_value;
  }
  res.accept_and_incorrect = total / static_cast<double>(num_keys);
  return res;
}

}  // namespace veriq

#endif  // VERIQ_CODES_SIGNED_POLYNOMIAL_HPP
