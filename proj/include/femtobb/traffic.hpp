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

#ifndef FEMTOBB_TRAFFIC_HPP_
#define FEMTOBB_TRAFFIC_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "femtobb/bandwidth.hpp"

// Open-loop demand generators. Calls and background flows arrive as Poisson
// processes and hold a constant rate for their lifetime; demand at a tick is
// the summed rate of everything alive at that instant.
namespace femtobb::traffic {

enum class CallKind { kVoice, kVideo, kData };

std::string_view to_string(CallKind kind);
std::optional<CallKind> parse_call_kind(std::string_view name);

struct CallClass {
  CallKind kind = CallKind::kVoice;
  Kbps rate;
  double mean_lifetime_s = 120.0;
  double mix_weight = 1.0;

  bool operator==(const CallClass&) const = default;
};

// voice 14.4 kbps, video 128 kbps, data 30 kbps; 120 s each; mix 5:2:1.
std::vector<CallClass> default_call_classes();

enum class LifetimeDistribution { kExponential, kFixed };

std::string_view to_string(LifetimeDistribution dist);
std::optional<LifetimeDistribution> parse_lifetime_distribution(std::string_view name);

struct FemtoTrafficConfig {
  unsigned users = 6;
  std::vector<CallClass> classes = default_call_classes();
  Kbps target_mean_demand{450.0};
  LifetimeDistribution lifetime_distribution = LifetimeDistribution::kExponential;

  bool operator==(const FemtoTrafficConfig&) const = default;
};

struct BackgroundTrafficConfig {
  Kbps arbit{5500.0};  // mean aggregate background demand
  Kbps per_flow_rate{75.0};
  double mean_flow_duration_s = 60.0;

  bool operator==(const BackgroundTrafficConfig&) const = default;
};

// One sampled path: samples[i] is the demand at t = i * t1.
struct DemandTrace {
  double t1_s = 1.0;
  std::vector<Kbps> samples;

  double time_average() const;
};

// A generated call or flow. Alive on [start_s, start_s + lifetime_s).
struct Call {
  double start_s = 0.0;
  double lifetime_s = 0.0;
  std::size_t class_index = 0;

  double end_s() const { return start_s + lifetime_s; }
};

// Mix-weighted mean rate. Throws std::invalid_argument on an empty list or a
// non-positive total weight.
Kbps mean_call_rate(std::span<const CallClass> classes);

// Per-user call arrival rate (calls/s) such that the stationary mean aggregate
// femtocell demand equals the configured target (Little's law).
double calibrate_femto_rate(const FemtoTrafficConfig& cfg);

// Background flow arrival rate (flows/s) whose stationary mean demand is ARBIT.
double calibrate_bg_rate(const BackgroundTrafficConfig& cfg);

// Independent child seed for a named stream of a parent seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream);

std::vector<Call> gen_femto_calls(const FemtoTrafficConfig& cfg, std::uint64_t seed,
                                  double duration_s);
std::vector<Call> gen_bg_flows(const BackgroundTrafficConfig& cfg, std::uint64_t seed,
                               double duration_s);

// Number of ticks of length t1 that fit in `duration_s`.
std::size_t tick_count(double duration_s, double t1_s);

// Samples the calls at every tick. A call contributes to tick i exactly when
// start <= i*t1 < end, i.e. mid-tick starts and ends round up to the next
// tick boundary.
DemandTrace rasterize(std::span<const Call> calls, std::span<const Kbps> class_rates,
                      double duration_s, double t1_s);

DemandTrace gen_femto_trace(const FemtoTrafficConfig& cfg, std::uint64_t seed,
                            double duration_s, double t1_s);
DemandTrace gen_bg_trace(const BackgroundTrafficConfig& cfg, std::uint64_t seed,
                         double duration_s, double t1_s);

// CSV with header `t,value_kbps`.
void write_trace_csv(const DemandTrace& trace, std::ostream& out);
void write_trace_csv(const DemandTrace& trace, const std::filesystem::path& path);

}  // namespace femtobb::traffic

#endif  // FEMTOBB_TRAFFIC_HPP_
