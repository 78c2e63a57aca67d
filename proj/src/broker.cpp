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

#include "femtobb/broker.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "femtobb/errors.hpp"

namespace femtobb::broker {
namespace {

std::size_t checked_sample_count(double t1_s, double period_s) {
  if (!(t1_s > 0.0) || !std::isfinite(t1_s)) {
    throw std::invalid_argument("sampling interval t1 must be positive");
  }
  if (!(period_s > 0.0) || !std::isfinite(period_s)) {
    throw std::invalid_argument("observation period T must be positive");
  }
  const double ratio = period_s / t1_s;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio)) {
    throw std::invalid_argument(fmt::format(
        "observation period T={} s must be an integer multiple of t1={} s", period_s, t1_s));
  }
  return static_cast<std::size_t>(rounded);
}

}  // namespace

ReservationWindow::ReservationWindow(double t1_s, double period_s, std::size_t m)
    : t1_s_(t1_s), period_s_(period_s), n_(checked_sample_count(t1_s, period_s)), m_(m) {
  if (m_ < 1) throw std::invalid_argument("window offset m must be >= 1");
}

void ReservationWindow::push(Kbps b_f) {
  samples_.push_front(b_f);
  if (samples_.size() > max_size()) samples_.pop_back();
}

Kbps ReservationWindow::mean() const {
  const std::size_t first = m_ - 1;
  if (samples_.size() <= first) return Kbps::zero();
  const std::size_t last = std::min(samples_.size(), first + n_);
  double sum = 0.0;
  for (std::size_t i = first; i < last; ++i) sum += samples_[i].value();
  return Kbps::clamped(sum / static_cast<double>(last - first));
}

SlaPolicy SlaPolicy::for_link(Kbps capacity, double t1_s, double period_s, std::size_t m) {
  return SlaPolicy{capacity, capacity, t1_s, period_s, m};
}

void SlaPolicy::validate() const {
  if (reserve_cap > capacity) {
    throw std::invalid_argument("reservation cap exceeds link capacity");
  }
  checked_sample_count(t1_s, period_s);
  if (m < 1) throw std::invalid_argument("window offset m must be >= 1");
}

Kbps reserve_bandwidth(const ReservationWindow& window, const SlaPolicy& policy) {
  return std::min(window.mean(), policy.reserve_cap);
}

Kbps negotiate(const SlaPolicy& policy, Kbps b_r) { return std::min(b_r, policy.reserve_cap); }

void HistoryLog::append(const HistoryRecord& record) {
  if (!records_.empty() && !(record.t > records_.back().t)) {
    throw std::invalid_argument(fmt::format(
        "history records must be strictly increasing in time ({} after {})", record.t,
        records_.back().t));
  }
  records_.push_back(record);
}

std::size_t export_history(std::span<const HistoryRecord> records, std::ostream& out) {
  out << "t,b_f,b_i,b_r,scheme\n";
  for (const auto& r : records) {
    out << fmt::format("{:.3f},{:.6f},{:.6f},{:.6f},{}\n", r.t, r.b_f.value(), r.b_i.value(),
                       r.b_r.value(), model::to_string(r.scheme));
  }
  return records.size();
}

std::size_t export_history(std::span<const HistoryRecord> records,
                           const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open history file for writing");
  const std::size_t rows = export_history(records, out);
  out.flush();
  if (!out) throw IoError(path, "failed writing history file");
  return rows;
}

BandwidthBroker::BandwidthBroker(SlaPolicy policy)
    : policy_(policy), window_((policy.validate(), policy.make_window())) {}

}  // namespace femtobb::broker
