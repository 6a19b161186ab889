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

#ifndef VERIQ_CORE_ANGLE_HPP
#define VERIQ_CORE_ANGLE_HPP

#include <cstdint>

#include "veriq/core/rng.hpp"
#include "veriq/core/types.hpp"

namespace veriq {

/// An XY-plane angle restricted to exact integer multiples of pi/4, stored as
/// an integer mod 8. All protocol angle arithmetic (delta = phi' + theta + r*pi)
/// happens on these integers, so there is no floating point drift in hiding
/// parameters or transcripts.
class Angle {
 public:
  constexpr Angle() : units_(0) {}
  constexpr explicit Angle(int units_of_pi_over_4)
      : units_(((units_of_pi_over_4 % 8) + 8) % 8) {}

  static Angle random(Rng& rng) { return Angle(static_cast<int>(rng.uniform_int(8))); }

  constexpr int units() const { return units_; }
  double radians() const { return units_ * (kPi / 4.0); }

  constexpr Angle operator+(Angle o) const { return Angle(units_ + o.units_); }
  constexpr Angle operator-(Angle o) const { return Angle(units_ - o.units_); }
  constexpr Angle operator-() const { return Angle(-units_); }
  /// Adds r * pi.
  constexpr Angle plus_half_turns(int r) const { return Angle(units_ + 4 * (r & 1)); }

  constexpr bool operator==(const Angle&) const = default;

 private:
  int units_;
};

inline constexpr Angle kAngleZero{0};
inline constexpr Angle kAnglePi{4};

}  // namespace veriq

#endif  // VERIQ_CORE_ANGLE_HPP
