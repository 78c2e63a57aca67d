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

#ifndef FEMTOBB_COMMANDS_HPP_
#define FEMTOBB_COMMANDS_HPP_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "femtobb/sim.hpp"

namespace femtobb::commands {

inline constexpr std::string_view kSummaryHeader =
    "scheme,arbit_kbps,mean_sl,std_sl,mean_util,std_util,replications";
inline constexpr std::string_view kTimeseriesHeader =
    "t,b_f,b_i,b_r,grant,femto_served,bg_served,sl,util,scheme";
inline constexpr std::string_view kUtilSlHeader = "scheme,arbit_kbps,mean_util,mean_sl";

struct ArbitRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;

  std::vector<Kbps> levels() const;
};

// "start:stop:step" in kbps. Throws std::invalid_argument when malformed,
// when start > stop, or when step <= 0.
ArbitRange parse_arbit_range(std::string_view text);

// Comma-separated scheme names; "both" selects both. Throws
// std::invalid_argument on unknown names or an empty list.
std::vector<model::Scheme> parse_schemes(std::string_view text);

void write_summary_csv(std::span<const sim::SchemeSummary> rows, std::ostream& out);
void write_timeseries_csv(std::span<const sim::TickRecord> ticks, std::ostream& out);
void write_util_sl_csv(std::span<const sim::SchemeSummary> rows, std::ostream& out);

// Where each output of `run` goes. An empty summary path means stdout; empty
// optional paths are skipped.
struct RunOutputs {
  std::filesystem::path summary;
  std::filesystem::path timeseries;
  std::filesystem::path history;
};

// run_experiment for the chosen schemes, then writes the summary CSV and, if
// asked, the per-tick timeseries and broker history of replication 0.
std::vector<sim::SchemeSummary> run_command(const sim::ScenarioConfig& cfg,
                                            std::span<const model::Scheme> schemes,
                                            const RunOutputs& outputs, std::ostream& stdout_sink);

// Path of the (utilization, satisfaction) companion file for a sweep table.
std::filesystem::path util_sl_path(const std::filesystem::path& sweep_csv);

// Writes the sweep table to `out` (stdout when empty) and, for a file target,
// the util/SL companion next to it.
std::vector<sim::SchemeSummary> sweep_command(const sim::ScenarioConfig& cfg,
                                              std::span<const Kbps> arbits,
                                              std::span<const model::Scheme> schemes,
                                              const std::filesystem::path& out,
                                              std::ostream& stdout_sink);

}  // namespace femtobb::commands

#endif  // FEMTOBB_COMMANDS_HPP_
