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

#include "femtobb/model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace femtobb::model {

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kTraditional:
      return "traditional";
    case Scheme::kProposed:
      return "proposed";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  if (name == "traditional") return Scheme::kTraditional;
  if (name == "proposed") return Scheme::kProposed;
  return std::nullopt;
}

Kbps available_bandwidth(Kbps capacity, Kbps b_i) { return saturating_sub(capacity, b_i); }

double satisfaction_level(Kbps b_a, Kbps b_f) {
  if (b_f == Kbps::zero() || b_a >= b_f) return 1.0;
  return b_a.value() / b_f.value();
}

Kbps borrowed_bandwidth(Kbps b_r, Kbps b_a) { return saturating_sub(b_r, b_a); }

Allocation allocate_traditional(Kbps capacity, const LinkSample& sample) {
  Allocation alloc;
  alloc.bg_served = std::min(sample.b_i, capacity);
  alloc.grant_femto = available_bandwidth(capacity, sample.b_i);
  alloc.femto_served = std::min(sample.b_f, alloc.grant_femto);
  alloc.borrowed = Kbps::zero();
  alloc.sl = satisfaction_level(alloc.grant_femto, sample.b_f);
  return alloc;
}

Allocation allocate_proposed(Kbps capacity, const LinkSample& sample, Kbps b_r) {
  if (b_r > capacity) {
    throw std::invalid_argument("reservation " + std::to_string(b_r.value()) +
                                " kbps exceeds link capacity " +
                                std::to_string(capacity.value()) + " kbps");
  }
  const Kbps residual = available_bandwidth(capacity, sample.b_i);
  Allocation alloc;
  alloc.grant_femto = std::min(capacity, std::max(b_r, residual));
  alloc.femto_served = std::min(sample.b_f, alloc.grant_femto);
  // Background gets whatever the femtocell neither uses nor holds in reserve.
  // When that hold fits inside the residual, background is untouched; taking
  // this branch explicitly keeps b_r = 0 bit-identical to the baseline.
  const Kbps held = std::max(b_r, alloc.femto_served);
  alloc.bg_served = held <= residual ? std::min(sample.b_i, capacity)
                                     : std::min(sample.b_i, saturating_sub(capacity, held));
  alloc.borrowed = borrowed_bandwidth(b_r, residual);
  alloc.sl = satisfaction_level(alloc.grant_femto, sample.b_f);
  return alloc;
}

double utilization(const Allocation& alloc, Kbps capacity) {
  if (capacity == Kbps::zero()) {
    throw std::invalid_argument("utilization is undefined for zero link capacity");
  }
  return std::clamp(alloc.total_served().value() / capacity.value(), 0.0, 1.0);
}

}  // namespace femtobb::model
