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

#ifndef FEMTOBB_SIM_HPP_
#define FEMTOBB_SIM_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "femtobb/bandwidth.hpp"
#include "femtobb/broker.hpp"
#include "femtobb/model.hpp"
#include "femtobb/traffic.hpp"

namespace femtobb::sim {

struct WindowConfig {
  double t1_s = 1.0;
  double period_s = 60.0;
  unsigned m = 1;

  bool operator==(const WindowConfig&) const = default;
};

struct RunConfig {
  double duration_s = 4000.0;  // measured, after warmup
  double warmup_s = 600.0;
  unsigned replications = 20;
  std::uint64_t base_seed = 1;

  bool operator==(const RunConfig&) const = default;
};

struct ScenarioConfig {
  Kbps capacity{6000.0};
  traffic::FemtoTrafficConfig femto;
  traffic::BackgroundTrafficConfig background;
  WindowConfig window;
  RunConfig run;

  bool operator==(const ScenarioConfig&) const = default;

  // Every violated invariant, as "key: problem" strings. Empty when valid.
  std::vector<std::string> validate() const;
  // Throws ConfigError listing all violations.
  void check() const;

  broker::SlaPolicy sla_policy() const;
  double total_duration_s() const { return run.warmup_s + run.duration_s; }
};

struct TickRecord {
  broker::HistoryRecord history;
  model::Allocation alloc;
  double util = 0.0;
};

struct RunResult {
  model::Scheme scheme = model::Scheme::kTraditional;
  std::uint64_t seed = 0;
  double mean_sl = 0.0;    // post-warmup time average
  double mean_util = 0.0;  // post-warmup time average
  std::vector<TickRecord> timeseries;  // every tick, when requested
};

struct SchemeSummary {
  model::Scheme scheme = model::Scheme::kTraditional;
  Kbps arbit;
  double mean_sl = 0.0;
  double std_sl = 0.0;  // sample std across replications; 0 for one replication
  double mean_util = 0.0;
  double std_util = 0.0;
  unsigned replications = 0;
};

struct SummaryStats {
  std::vector<SchemeSummary> schemes;
  // Per-replication results, grouped by scheme then replication index.
  std::vector<RunResult> runs;
};

// Seed of replication k; depends only on (base_seed, k).
std::uint64_t replication_seed(std::uint64_t base_seed, unsigned k);

// Unique schemes in canonical order (traditional before proposed).
std::vector<model::Scheme> canonical_schemes(std::span<const model::Scheme> schemes);

// Walks a pair of demand traces tick by tick under `scheme`. Throws
// ConfigError for an invalid config, std::invalid_argument if the traces
// differ in length or tick, and std::logic_error if an allocation ever breaks
// capacity conservation.
RunResult simulate(const ScenarioConfig& cfg, model::Scheme scheme,
                   const traffic::DemandTrace& femto, const traffic::DemandTrace& background,
                   bool keep_timeseries = false);

// Generates this replication's traces from `seed` and simulates them.
RunResult run_replication(const ScenarioConfig& cfg, model::Scheme scheme, std::uint64_t seed,
                          bool keep_timeseries = false);

// Runs every scheme over the same replication seeds so traces are paired.
SummaryStats run_experiment(const ScenarioConfig& cfg, std::span<const model::Scheme> schemes);

// One summary per (arbit, scheme), ordered by arbit then scheme.
std::vector<SchemeSummary> sweep_arbit(const ScenarioConfig& cfg, std::span<const Kbps> arbits,
                                       std::span<const model::Scheme> schemes);

}  // namespace femtobb::sim

#endif  // FEMTOBB_SIM_HPP_
