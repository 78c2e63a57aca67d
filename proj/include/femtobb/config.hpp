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

#ifndef FEMTOBB_CONFIG_HPP_
#define FEMTOBB_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "femtobb/sim.hpp"

// JSON scenario files. Missing keys take the defaults of sim::ScenarioConfig;
// unknown keys, wrong types and invariant violations are all reported together
// in one ConfigError.
//
//   {
//     "capacity_kbps": 6000,
//     "femto": {"users": 6, "target_mean_kbps": 450,
//               "lifetime_distribution": "exponential",
//               "classes": [{"kind": "voice", "rate_kbps": 14.4,
//                            "mean_lifetime_s": 120, "weight": 5}, ...]},
//     "background": {"arbit_kbps": 5500, "per_flow_kbps": 75,
//                    "mean_flow_duration_s": 60},
//     "window": {"t1_s": 1, "T_s": 60, "m": 1},
//     "run": {"duration_s": 4000, "warmup_s": 600, "replications": 20,
//             "base_seed": 1}
//   }
namespace femtobb::config {

// `origin` names the source in error messages (usually the file path).
sim::ScenarioConfig parse_config(std::string_view json_text, std::string_view origin = "<config>");

// Throws ConfigError if the file is missing, unreadable or invalid.
sim::ScenarioConfig load_config(const std::filesystem::path& path);

// Pretty-printed JSON with every key present; parse_config inverts it exactly.
std::string write_config(const sim::ScenarioConfig& cfg);

}  // namespace femtobb::config

#endif  // FEMTOBB_CONFIG_HPP_
