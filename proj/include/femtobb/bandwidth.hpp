// Copyright 2026 The femtobb Authors
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

#ifndef FEMTOBB_BANDWIDTH_HPP_
#define FEMTOBB_BANDWIDTH_HPP_

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>

namespace femtobb {

// Non-negative bandwidth in kilobits per second. The checked constructor
// rejects negative and NaN values; `clamped` maps them to zero instead.
class Kbps {
 public:
  constexpr Kbps() = default;
  constexpr explicit Kbps(double value) : value_(value) {
    if (!(value >= 0.0)) {
      throw std::invalid_argument("bandwidth must be a non-negative number of kbps, got " +
                                  std::to_string(value));
    }
  }

  static constexpr Kbps clamped(double value) { return Kbps(value > 0.0 ? value : 0.0); }
  static constexpr Kbps zero() { return Kbps(); }

  constexpr double value() const { return value_; }

  constexpr auto operator<=>(const Kbps&) const = default;

  constexpr Kbps& operator+=(Kbps other) {
    value_ += other.value_;
    return *this;
  }
  friend constexpr Kbps operator+(Kbps a, Kbps b) { return a += b; }

  // a - b, floored at zero.
  friend constexpr Kbps saturating_sub(Kbps a, Kbps b) { return clamped(a.value_ - b.value_); }

 private:
  double value_ = 0.0;
};

}  // namespace femtobb

#endif  // FEMTOBB_BANDWIDTH_HPP_
