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

// femtobb: command-line front end to the bandwidth broker simulator.
//
//   femtobb run      [config.json] [--scheme S] [--seed N] [--out F]
//                    [--timeseries F] [--history F]
//   femtobb sweep    [config.json] --arbit start:stop:step [--schemes L] [--out F]
//   femtobb report   sweep.csv --out-dir DIR
//   femtobb validate-config config.json [--print]
//
// Exit status: 0 success, 1 usage/config/data error, 2 I/O error.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "femtobb/femtobb.h"

namespace {

constexpr const char* kDefaultsHelp = R"(Scenario defaults (override in a JSON config; bandwidths in kbps):
  capacity_kbps                 6000   (6 Mbps xDSL line)
  femto.users                   6
  femto.target_mean_kbps        450    (aggregate femtocell load)
  femto.classes                 voice 14.4 / video 128 / data 30 kbps,
                                120 s mean lifetime, mix 5:2:1
  femto.lifetime_distribution   exponential
  background.arbit_kbps         5500   (mean non-femtocell demand)
  background.per_flow_kbps      75
  background.mean_flow_duration_s 60
  window.t1_s / T_s / m         1 / 60 / 1
  run.duration_s / warmup_s     4000 / 600
  run.replications              20     (one per simulated FAP)
  run.base_seed                 1)";

using ConfigPtr = std::unique_ptr<fbb_config, decltype(&fbb_config_destroy)>;

int exit_code(fbb_status status) {
  switch (status) {
    case FBB_OK:
      return 0;
    case FBB_ERR_IO:
      return 2;
    default:
      return 1;
  }
}

int report_failure(fbb_status status) {
  std::fprintf(stderr, "femtobb: %s: %s\n", fbb_status_string(status), fbb_last_error());
  return exit_code(status);
}

// Loads `path`, or the defaults when no path was given.
std::optional<ConfigPtr> open_config(const std::string& path, int& rc) {
  fbb_config* raw = nullptr;
  const fbb_status status =
      path.empty() ? fbb_config_default(&raw) : fbb_config_load(path.c_str(), &raw);
  if (status != FBB_OK) {
    rc = report_failure(status);
    return std::nullopt;
  }
  return ConfigPtr(raw, &fbb_config_destroy);
}

const char* c_str_or_null(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Femtocell backhaul bandwidth broker: dynamic SLA reservation simulator"};
  app.footer(kDefaultsHelp);
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fbb_version()));

  std::string config_path;
  std::string out_path;

  auto* run = app.add_subcommand("run", "Run all replications for the chosen scheme(s)");
  std::string scheme_arg = "both";
  std::optional<std::uint64_t> seed;
  std::string timeseries_path;
  std::string history_path;
  run->add_option("config", config_path, "Scenario JSON (defaults when omitted)");
  run->add_option("--scheme", scheme_arg, "traditional, proposed or both")
      ->capture_default_str();
  run->add_option("--seed", seed, "Override run.base_seed");
  run->add_option("--out", out_path, "Summary CSV path (stdout when omitted)");
  run->add_option("--timeseries", timeseries_path,
                  "Per-tick CSV of replication 0 for each scheme");
  run->add_option("--history", history_path, "Broker history CSV (t,b_f,b_i,b_r,scheme)");

  auto* sweep = app.add_subcommand("sweep", "Sweep background load (ARBIT) levels");
  std::string arbit_range;
  std::string schemes_arg = "both";
  sweep->add_option("config", config_path, "Scenario JSON (defaults when omitted)");
  sweep->add_option("--arbit", arbit_range, "ARBIT levels as start:stop:step in kbps")
      ->required();
  sweep->add_option("--schemes", schemes_arg, "Comma list of schemes, or both")
      ->capture_default_str();
  sweep->add_option("--seed", seed, "Override run.base_seed");
  sweep->add_option("--out", out_path,
                    "Sweep CSV path (stdout when omitted); also writes <stem>_util_sl.csv");

  auto* report = app.add_subcommand("report", "Render SVG charts and a summary from a sweep CSV");
  std::string sweep_csv;
  std::string out_dir;
  report->add_option("sweep_csv", sweep_csv, "CSV written by `sweep`")->required();
  report->add_option("--out-dir", out_dir, "Directory for charts and summary.txt")->required();

  auto* validate = app.add_subcommand("validate-config", "Check a scenario JSON file");
  bool print = false;
  validate->add_option("config", config_path, "Scenario JSON")->required();
  validate->add_flag("--print", print, "Print the effective configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  int rc = 0;
  if (*run) {
    unsigned schemes = 0;
    if (auto s = fbb_parse_schemes(scheme_arg.c_str(), &schemes); s != FBB_OK) {
      return report_failure(s);
    }
    auto cfg = open_config(config_path, rc);
    if (!cfg) return rc;
    if (seed) fbb_config_set_base_seed(cfg->get(), *seed);
    const fbb_status s = fbb_run(cfg->get(), schemes, c_str_or_null(out_path),
                                 c_str_or_null(timeseries_path), c_str_or_null(history_path));
    return s == FBB_OK ? 0 : report_failure(s);
  }

  if (*sweep) {
    double start = 0, stop = 0, step = 0;
    unsigned schemes = 0;
    if (auto s = fbb_parse_arbit_range(arbit_range.c_str(), &start, &stop, &step); s != FBB_OK) {
      return report_failure(s);
    }
    if (auto s = fbb_parse_schemes(schemes_arg.c_str(), &schemes); s != FBB_OK) {
      return report_failure(s);
    }
    auto cfg = open_config(config_path, rc);
    if (!cfg) return rc;
    if (seed) fbb_config_set_base_seed(cfg->get(), *seed);
    const fbb_status s =
        fbb_sweep(cfg->get(), start, stop, step, schemes, c_str_or_null(out_path));
    return s == FBB_OK ? 0 : report_failure(s);
  }

  if (*report) {
    const fbb_status s = fbb_report(sweep_csv.c_str(), out_dir.c_str());
    return s == FBB_OK ? 0 : report_failure(s);
  }

  if (*validate) {
    auto cfg = open_config(config_path, rc);
    if (!cfg) return rc;
    if (print) {
      std::size_t needed = 0;
      fbb_config_to_json(cfg->get(), nullptr, 0, &needed);
      std::vector<char> buf(needed);
      if (auto s = fbb_config_to_json(cfg->get(), buf.data(), buf.size(), &needed); s != FBB_OK) {
        return report_failure(s);
      }
      std::fputs(buf.data(), stdout);
    } else {
      std::printf("%s: ok\n", config_path.c_str());
    }
    return 0;
  }
  return 1;
}
