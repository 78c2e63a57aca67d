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

#include "femtobb/traffic.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <stdexcept>

#include "femtobb/errors.hpp"

namespace femtobb::traffic {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Marked Poisson arrivals on [0, duration). `draw_class` and `draw_lifetime`
// consume from the same engine, in arrival order.
template <typename DrawClass, typename DrawLifetime>
std::vector<Call> poisson_arrivals(double rate, double duration_s, std::mt19937_64& rng,
                                   DrawClass&& draw_class, DrawLifetime&& draw_lifetime) {
  std::vector<Call> calls;
  if (!(rate > 0.0) || !(duration_s > 0.0)) return calls;
  calls.reserve(static_cast<std::size_t>(rate * duration_s * 1.1) + 16);
  std::exponential_distribution<double> gap(rate);
  for (double t = gap(rng); t < duration_s; t += gap(rng)) {
    Call call;
    call.start_s = t;
    call.class_index = draw_class();
    call.lifetime_s = draw_lifetime(call.class_index);
    calls.push_back(call);
  }
  return calls;
}

double draw_lifetime(double mean, LifetimeDistribution dist, std::mt19937_64& rng) {
  if (dist == LifetimeDistribution::kFixed) return mean;
  return std::exponential_distribution<double>(1.0 / mean)(rng);
}

void check_classes(std::span<const CallClass> classes) {
  if (classes.empty()) throw std::invalid_argument("call class list is empty");
  double total_weight = 0.0;
  for (const auto& c : classes) {
    if (!(c.mix_weight > 0.0)) throw std::invalid_argument("call class weights must be positive");
    if (!(c.mean_lifetime_s > 0.0)) {
      throw std::invalid_argument("call class mean lifetime must be positive");
    }
    total_weight += c.mix_weight;
  }
  if (!(total_weight > 0.0)) throw std::invalid_argument("total call class weight must be positive");
}

}  // namespace

std::string_view to_string(CallKind kind) {
  switch (kind) {
    case CallKind::kVoice:
      return "voice";
    case CallKind::kVideo:
      return "video";
    case CallKind::kData:
      return "data";
  }
  return "unknown";
}

std::optional<CallKind> parse_call_kind(std::string_view name) {
  if (name == "voice") return CallKind::kVoice;
  if (name == "video") return CallKind::kVideo;
  if (name == "data") return CallKind::kData;
  return std::nullopt;
}

std::string_view to_string(LifetimeDistribution dist) {
  return dist == LifetimeDistribution::kFixed ? "fixed" : "exponential";
}

std::optional<LifetimeDistribution> parse_lifetime_distribution(std::string_view name) {
  if (name == "exponential") return LifetimeDistribution::kExponential;
  if (name == "fixed") return LifetimeDistribution::kFixed;
  return std::nullopt;
}

std::vector<CallClass> default_call_classes() {
  return {
      {CallKind::kVoice, Kbps(14.4), 120.0, 5.0},
      {CallKind::kVideo, Kbps(128.0), 120.0, 2.0},
      // Only voice and video lifetimes are given; data reuses the same mean.
      {CallKind::kData, Kbps(30.0), 120.0, 1.0},
  };
}

double DemandTrace::time_average() const {
  if (samples.empty()) return 0.0;
  double sum = 0.0;
  for (Kbps s : samples) sum += s.value();
  return sum / static_cast<double>(samples.size());
}

Kbps mean_call_rate(std::span<const CallClass> classes) {
  if (classes.empty()) throw std::invalid_argument("call class list is empty");
  double weighted = 0.0;
  double total = 0.0;
  for (const auto& c : classes) {
    weighted += c.mix_weight * c.rate.value();
    total += c.mix_weight;
  }
  if (!(total > 0.0)) throw std::invalid_argument("total call class weight must be positive");
  return Kbps(weighted / total);
}

double calibrate_femto_rate(const FemtoTrafficConfig& cfg) {
  if (cfg.users < 1) throw std::invalid_argument("femtocell needs at least one user");
  check_classes(cfg.classes);
  // Mean demand per call arrival: sum_i p_i * rate_i * lifetime_i. Equal to
  // mean_lifetime * mean_call_rate when every class has the same lifetime.
  double total_weight = 0.0;
  double load_per_arrival = 0.0;
  for (const auto& c : cfg.classes) {
    total_weight += c.mix_weight;
    load_per_arrival += c.mix_weight * c.rate.value() * c.mean_lifetime_s;
  }
  load_per_arrival /= total_weight;
  if (!(load_per_arrival > 0.0)) {
    throw std::invalid_argument("mean call rate is zero; cannot calibrate arrivals");
  }
  return cfg.target_mean_demand.value() / (static_cast<double>(cfg.users) * load_per_arrival);
}

double calibrate_bg_rate(const BackgroundTrafficConfig& cfg) {
  const double per_flow_load = cfg.per_flow_rate.value() * cfg.mean_flow_duration_s;
  if (!(per_flow_load > 0.0) || !std::isfinite(per_flow_load)) {
    throw std::invalid_argument("background per-flow rate and duration must be positive");
  }
  return cfg.arbit.value() / per_flow_load;
}

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream) {
  return splitmix64(splitmix64(parent) ^ splitmix64(~stream));
}

std::vector<Call> gen_femto_calls(const FemtoTrafficConfig& cfg, std::uint64_t seed,
                                  double duration_s) {
  const double per_user = calibrate_femto_rate(cfg);
  std::mt19937_64 rng(seed);
  std::vector<double> weights;
  for (const auto& c : cfg.classes) weights.push_back(c.mix_weight);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  return poisson_arrivals(
      per_user * cfg.users, duration_s, rng, [&] { return pick(rng); },
      [&](std::size_t k) {
        return draw_lifetime(cfg.classes[k].mean_lifetime_s, cfg.lifetime_distribution, rng);
      });
}

std::vector<Call> gen_bg_flows(const BackgroundTrafficConfig& cfg, std::uint64_t seed,
                               double duration_s) {
  const double rate = calibrate_bg_rate(cfg);
  std::mt19937_64 rng(seed);
  return poisson_arrivals(
      rate, duration_s, rng, [] { return std::size_t{0}; },
      [&](std::size_t) {
        return draw_lifetime(cfg.mean_flow_duration_s, LifetimeDistribution::kExponential, rng);
      });
}

std::size_t tick_count(double duration_s, double t1_s) {
  if (!(t1_s > 0.0)) throw std::invalid_argument("tick length must be positive");
  if (!(duration_s > 0.0)) return 0;
  return static_cast<std::size_t>(std::floor(duration_s / t1_s + 1e-9));
}

DemandTrace rasterize(std::span<const Call> calls, std::span<const Kbps> class_rates,
                      double duration_s, double t1_s) {
  const std::size_t ticks = tick_count(duration_s, t1_s);
  const std::size_t classes = class_rates.size();
  // Integer occupancy per class avoids drift from summing doubles over long
  // runs; the trace is then exact up to one multiply-add per class.
  std::vector<std::int64_t> delta((ticks + 1) * classes, 0);
  for (const auto& call : calls) {
    if (call.class_index >= classes) throw std::out_of_range("call class index out of range");
    const double first = std::ceil(call.start_s / t1_s);
    const double last = std::ceil(call.end_s() / t1_s);
    if (first >= static_cast<double>(ticks) || last <= first) continue;
    const auto lo = static_cast<std::size_t>(std::max(0.0, first));
    const auto hi = static_cast<std::size_t>(std::min(last, static_cast<double>(ticks)));
    ++delta[lo * classes + call.class_index];
    --delta[hi * classes + call.class_index];
  }
  DemandTrace trace;
  trace.t1_s = t1_s;
  trace.samples.reserve(ticks);
  std::vector<std::int64_t> alive(classes, 0);
  for (std::size_t i = 0; i < ticks; ++i) {
    double demand = 0.0;
    for (std::size_t k = 0; k < classes; ++k) {
      alive[k] += delta[i * classes + k];
      demand += static_cast<double>(alive[k]) * class_rates[k].value();
    }
    trace.samples.push_back(Kbps::clamped(demand));
  }
  return trace;
}

DemandTrace gen_femto_trace(const FemtoTrafficConfig& cfg, std::uint64_t seed,
                            double duration_s, double t1_s) {
  std::vector<Kbps> rates;
  for (const auto& c : cfg.classes) rates.push_back(c.rate);
  return rasterize(gen_femto_calls(cfg, seed, duration_s), rates, duration_s, t1_s);
}

DemandTrace gen_bg_trace(const BackgroundTrafficConfig& cfg, std::uint64_t seed,
                         double duration_s, double t1_s) {
  const Kbps rate[] = {cfg.per_flow_rate};
  return rasterize(gen_bg_flows(cfg, seed, duration_s), rate, duration_s, t1_s);
}

void write_trace_csv(const DemandTrace& trace, std::ostream& out) {
  out << "t,value_kbps\n";
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    out << fmt::format("{:.3f},{:.6f}\n", static_cast<double>(i) * trace.t1_s,
                       trace.samples[i].value());
  }
}

void write_trace_csv(const DemandTrace& trace, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open trace file for writing");
  write_trace_csv(trace, out);
  out.flush();
  if (!out) throw IoError(path, "failed writing trace file");
}

}  // namespace femtobb::traffic
