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

#ifndef FEMTOBB_REPORT_HPP_
#define FEMTOBB_REPORT_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "femtobb/sim.hpp"

// Renders a sweep table into standalone SVG charts and a text summary.
namespace femtobb::report {

inline constexpr double kTargetSatisfaction = 0.95;
inline constexpr double kComparisonArbitKbps = 6000.0;

// Parses a sweep/summary CSV. Throws DataError naming the bad header or the
// line number of the first malformed row, or "no data" when there are no rows.
std::vector<sim::SchemeSummary> read_sweep_csv(std::istream& in);
std::vector<sim::SchemeSummary> read_sweep_csv(const std::filesystem::path& path);

// Highest ARBIT level at which `scheme` keeps mean SL >= target.
std::optional<sim::SchemeSummary> best_level_meeting(const std::vector<sim::SchemeSummary>& rows,
                                                     model::Scheme scheme, double target);

// Files written by render_report, relative to the output directory.
std::vector<std::string> report_files();

// Writes the four SVG charts and summary.txt into `out_dir` (created if
// needed). Throws IoError on write failure.
void render_report(const std::vector<sim::SchemeSummary>& rows,
                   const std::filesystem::path& out_dir);

std::string summary_text(const std::vector<sim::SchemeSummary>& rows);

}  // namespace femtobb::report

#endif  // FEMTOBB_REPORT_HPP_
