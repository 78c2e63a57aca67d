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

#ifndef FEMTOBB_MODEL_HPP_
#define FEMTOBB_MODEL_HPP_

#include <optional>
#include <string_view>

#include "femtobb/bandwidth.hpp"

// Per-instant allocation of a shared backhaul link between femtocell calls and
// background (non-femtocell) traffic. Everything here is a pure function.
namespace femtobb::model {

enum class Scheme {
  kTraditional,  // background first, femtocell gets the residual
  kProposed,     // femtocell guaranteed at least the brokered reservation
};

std::string_view to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);

// One monitoring instant. Both values are demands and may exceed capacity.
struct LinkSample {
  double t = 0.0;
  Kbps b_i;  // background demand
  Kbps b_f;  // femtocell requested bandwidth
};

struct Allocation {
  Kbps grant_femto;  // entitlement under the active scheme
  Kbps femto_served;
  Kbps bg_served;
  Kbps borrowed;     // taken from background to honour the reservation
  double sl = 1.0;   // satisfaction level in [0, 1]

  Kbps total_served() const { return femto_served + bg_served; }
};

// Capacity left after background demand, floored at zero.
Kbps available_bandwidth(Kbps capacity, Kbps b_i);

// 1 when available >= requested (or nothing is requested), else the ratio.
double satisfaction_level(Kbps b_a, Kbps b_f);

// How far the reservation exceeds the residual capacity; zero otherwise.
Kbps borrowed_bandwidth(Kbps b_r, Kbps b_a);

Allocation allocate_traditional(Kbps capacity, const LinkSample& sample);

// Femtocell entitlement is max(reservation, residual), capped at capacity.
// Reserved headroom the femtocell does not use is withheld from background
// traffic. Throws std::invalid_argument if b_r > capacity.
Allocation allocate_proposed(Kbps capacity, const LinkSample& sample, Kbps b_r);

// Served fraction of the link. Throws std::invalid_argument on zero capacity.
double utilization(const Allocation& alloc, Kbps capacity);

}  // namespace femtobb::model

#endif  // FEMTOBB_MODEL_HPP_
