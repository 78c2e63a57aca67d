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

#include "femtobb/sim.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "femtobb/errors.hpp"

namespace femtobb::sim {
namespace {

constexpr std::uint64_t kFemtoStream = 1;
constexpr std::uint64_t kBackgroundStream = 2;

bool positive_finite(double x) { return x > 0.0 && std::isfinite(x); }

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

MeanStd mean_std(std::span<const double> xs) {
  MeanStd out;
  if (xs.empty()) return out;
  for (double x : xs) out.mean += x;
  out.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return out;
}

}  // namespace

std::vector<std::string> ScenarioConfig::validate() const {
  std::vector<std::string> issues;
  auto require = [&](bool ok, const std::string& msg) {
    if (!ok) issues.push_back(msg);
  };

  require(positive_finite(capacity.value()), "capacity_kbps: must be > 0");

  require(femto.users >= 1, "femto.users: must be >= 1");
  require(std::isfinite(femto.target_mean_demand.value()),
          "femto.target_mean_kbps: must be finite");
  if (femto.classes.empty()) {
    issues.push_back("femto.classes: at least one call class is required");
  }
  for (std::size_t i = 0; i < femto.classes.size(); ++i) {
    const auto& c = femto.classes[i];
    require(std::isfinite(c.rate.value()), fmt::format("femto.classes[{}].rate_kbps: must be finite", i));
    require(positive_finite(c.mean_lifetime_s),
            fmt::format("femto.classes[{}].mean_lifetime_s: must be > 0", i));
    require(positive_finite(c.mix_weight), fmt::format("femto.classes[{}].weight: must be > 0", i));
  }
  if (!femto.classes.empty()) {
    double load = 0.0;
    for (const auto& c : femto.classes) load += c.mix_weight * c.rate.value();
    require(load > 0.0, "femto.classes: mean call rate must be > 0 to calibrate arrivals");
  }

  require(std::isfinite(background.arbit.value()), "background.arbit_kbps: must be finite");
  require(positive_finite(background.per_flow_rate.value()),
          "background.per_flow_kbps: must be > 0");
  require(positive_finite(background.mean_flow_duration_s),
          "background.mean_flow_duration_s: must be > 0");

  const bool t1_ok = positive_finite(window.t1_s);
  require(t1_ok, "window.t1_s: must be > 0");
  require(positive_finite(window.period_s), "window.T_s: must be > 0");
  if (t1_ok && positive_finite(window.period_s)) {
    const double ratio = window.period_s / window.t1_s;
    require(ratio >= 1.0 - 1e-9 && std::abs(ratio - std::round(ratio)) <= 1e-9 * ratio,
            fmt::format("window.T_s: {} is not an integer multiple of window.t1_s {}",
                        window.period_s, window.t1_s));
  }
  require(window.m >= 1, "window.m: must be >= 1");

  require(positive_finite(run.duration_s), "run.duration_s: must be > 0");
  require(run.warmup_s >= 0.0 && std::isfinite(run.warmup_s), "run.warmup_s: must be >= 0");
  require(run.warmup_s < run.duration_s, "run.warmup_s: must be less than run.duration_s");
  require(run.replications >= 1, "run.replications: must be >= 1");
  if (t1_ok && positive_finite(run.duration_s)) {
    require(traffic::tick_count(run.duration_s, window.t1_s) >= 1,
            "run.duration_s: shorter than one tick");
  }
  return issues;
}

void ScenarioConfig::check() const {
  auto issues = validate();
  if (!issues.empty()) throw ConfigError(std::move(issues));
}

broker::SlaPolicy ScenarioConfig::sla_policy() const {
  return broker::SlaPolicy::for_link(capacity, window.t1_s, window.period_s, window.m);
}

std::uint64_t replication_seed(std::uint64_t base_seed, unsigned k) {
  return traffic::derive_seed(base_seed, 0x5eed0000ULL + k);
}

std::vector<model::Scheme> canonical_schemes(std::span<const model::Scheme> schemes) {
  std::vector<model::Scheme> out;
  for (auto s : {model::Scheme::kTraditional, model::Scheme::kProposed}) {
    if (std::find(schemes.begin(), schemes.end(), s) != schemes.end()) out.push_back(s);
  }
  return out;
}

RunResult run_replication(const ScenarioConfig& cfg, model::Scheme scheme, std::uint64_t seed,
                          bool keep_timeseries) {
  cfg.check();
  const double t1 = cfg.window.t1_s;
  const double horizon = cfg.total_duration_s();
  const auto femto = traffic::gen_femto_trace(cfg.femto, traffic::derive_seed(seed, kFemtoStream),
                                              horizon, t1);
  const auto bg = traffic::gen_bg_trace(cfg.background,
                                        traffic::derive_seed(seed, kBackgroundStream), horizon, t1);
  auto result = simulate(cfg, scheme, femto, bg, keep_timeseries);
  result.seed = seed;
  return result;
}

RunResult simulate(const ScenarioConfig& cfg, model::Scheme scheme,
                   const traffic::DemandTrace& femto, const traffic::DemandTrace& bg,
                   bool keep_timeseries) {
  cfg.check();
  const double t1 = cfg.window.t1_s;
  if (femto.samples.size() != bg.samples.size() || femto.t1_s != t1 || bg.t1_s != t1) {
    throw std::invalid_argument("demand traces must share the window tick and length");
  }
  const std::size_t ticks = femto.samples.size();
  const auto warm_ticks = static_cast<std::size_t>(std::ceil(cfg.run.warmup_s / t1 - 1e-9));

  broker::BandwidthBroker broker(cfg.sla_policy());
  const Kbps c = cfg.capacity;
  const double slack = 1e-9 * c.value();

  RunResult result;
  result.scheme = scheme;
  if (keep_timeseries) result.timeseries.reserve(ticks);

  double sl_sum = 0.0;
  double util_sum = 0.0;
  std::size_t measured = 0;
  for (std::size_t i = 0; i < ticks; ++i) {
    const model::LinkSample sample{static_cast<double>(i) * t1, bg.samples[i], femto.samples[i]};
    Kbps b_r;
    model::Allocation alloc;
    if (scheme == model::Scheme::kProposed) {
      b_r = broker.reservation();
      alloc = model::allocate_proposed(c, sample, b_r);
      broker.observe(sample.b_f);
    } else {
      alloc = model::allocate_traditional(c, sample);
    }
    if (alloc.total_served().value() > c.value() + slack) {
      throw std::logic_error(fmt::format("capacity conservation violated at t={}: {} > {}",
                                         sample.t, alloc.total_served().value(), c.value()));
    }
    const double util = model::utilization(alloc, c);
    if (i >= warm_ticks) {
      sl_sum += alloc.sl;
      util_sum += util;
      ++measured;
    }
    if (keep_timeseries) {
      result.timeseries.push_back({{sample.t, sample.b_f, sample.b_i, b_r, scheme}, alloc, util});
    }
  }
  if (measured > 0) {
    result.mean_sl = sl_sum / static_cast<double>(measured);
    result.mean_util = util_sum / static_cast<double>(measured);
  }
  return result;
}

SummaryStats run_experiment(const ScenarioConfig& cfg, std::span<const model::Scheme> schemes) {
  cfg.check();
  SummaryStats stats;
  const unsigned reps = cfg.run.replications;
  for (auto scheme : canonical_schemes(schemes)) {
    std::vector<double> sls;
    std::vector<double> utils;
    for (unsigned k = 0; k < reps; ++k) {
      auto run = run_replication(cfg, scheme, replication_seed(cfg.run.base_seed, k));
      sls.push_back(run.mean_sl);
      utils.push_back(run.mean_util);
      stats.runs.push_back(std::move(run));
    }
    const auto sl = mean_std(sls);
    const auto util = mean_std(utils);
    stats.schemes.push_back(
        {scheme, cfg.background.arbit, sl.mean, sl.std, util.mean, util.std, reps});
  }
  return stats;
}

std::vector<SchemeSummary> sweep_arbit(const ScenarioConfig& cfg, std::span<const Kbps> arbits,
                                       std::span<const model::Scheme> schemes) {
  if (arbits.empty()) throw std::invalid_argument("ARBIT sweep needs at least one level");
  std::vector<SchemeSummary> rows;
  for (Kbps arbit : arbits) {
    ScenarioConfig level = cfg;
    level.background.arbit = arbit;
    auto stats = run_experiment(level, schemes);
    rows.insert(rows.end(), stats.schemes.begin(), stats.schemes.end());
  }
  return rows;
}

}  // namespace femtobb::sim
