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

#ifndef FEMTOBB_BROKER_HPP_
#define FEMTOBB_BROKER_HPP_

#include <cstddef>
#include <deque>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "femtobb/bandwidth.hpp"
#include "femtobb/model.hpp"

namespace femtobb::broker {

// Sliding history of femtocell demand samples taken every t1 seconds.
//
// The reservation at instant t is the mean of the N = T / t1 samples that
// start m samples back: offsets m .. m+N-1, where offset 1 is the most recent
// completed sample. The buffer therefore holds at most (m - 1) + N samples,
// newest first.
class ReservationWindow {
 public:
  // Throws std::invalid_argument unless t1 > 0, T is a positive integer
  // multiple of t1 and m >= 1.
  ReservationWindow(double t1_s, double period_s, std::size_t m = 1);

  // Record the demand of the tick that just completed. Call after the
  // reservation for that tick has been read.
  void push(Kbps b_f);

  // Mean over the offsets that currently hold a sample (partial mean during
  // cold start); zero for an empty window.
  Kbps mean() const;

  double t1() const { return t1_s_; }
  double period() const { return period_s_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t size() const { return samples_.size(); }
  std::size_t max_size() const { return m_ - 1 + n_; }
  const std::deque<Kbps>& samples() const { return samples_; }

 private:
  double t1_s_;
  double period_s_;
  std::size_t n_;
  std::size_t m_;
  std::deque<Kbps> samples_;
};

struct SlaPolicy {
  Kbps capacity;
  Kbps reserve_cap;  // upper bound on any reservation; <= capacity
  double t1_s = 1.0;
  double period_s = 60.0;
  std::size_t m = 1;

  // Policy whose reservation cap is the full link.
  static SlaPolicy for_link(Kbps capacity, double t1_s, double period_s, std::size_t m);

  // Throws std::invalid_argument on reserve_cap > capacity or bad window
  // parameters.
  void validate() const;
  ReservationWindow make_window() const { return ReservationWindow(t1_s, period_s, m); }
};

// Dynamic reservation for the current instant: window mean, capped.
Kbps reserve_bandwidth(const ReservationWindow& window, const SlaPolicy& policy);

// SLA-granted floor handed to the allocator.
Kbps negotiate(const SlaPolicy& policy, Kbps b_r);

struct HistoryRecord {
  double t = 0.0;
  Kbps b_f;
  Kbps b_i;
  Kbps b_r;
  model::Scheme scheme = model::Scheme::kProposed;
};

// Append-only monitoring log. Times must be strictly increasing.
class HistoryLog {
 public:
  void append(const HistoryRecord& record);
  const std::vector<HistoryRecord>& records() const { return records_; }
  void clear() { records_.clear(); }

 private:
  std::vector<HistoryRecord> records_;
};

// CSV with header `t,b_f,b_i,b_r,scheme`. Returns the number of data rows.
std::size_t export_history(std::span<const HistoryRecord> records, std::ostream& out);
// Throws IoError naming `path` if it cannot be written.
std::size_t export_history(std::span<const HistoryRecord> records,
                           const std::filesystem::path& path);

// Owns the window for one replication and applies the SLA policy to it.
class BandwidthBroker {
 public:
  explicit BandwidthBroker(SlaPolicy policy);

  // Floor granted to femtocell traffic at the current instant.
  Kbps reservation() const { return negotiate(policy_, reserve_bandwidth(window_, policy_)); }
  void observe(Kbps b_f) { window_.push(b_f); }

  const SlaPolicy& policy() const { return policy_; }
  const ReservationWindow& window() const { return window_; }

 private:
  SlaPolicy policy_;
  ReservationWindow window_;
};

}  // namespace femtobb::broker

#endif  // FEMTOBB_BROKER_HPP_
