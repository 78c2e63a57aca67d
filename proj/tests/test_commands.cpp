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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "femtobb/commands.hpp"
#include "femtobb/errors.hpp"

using femtobb::Kbps;
using femtobb::model::Scheme;
using namespace femtobb::commands;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

femtobb::sim::ScenarioConfig quick() {
  femtobb::sim::ScenarioConfig cfg;
  cfg.run.duration_s = 600;
  cfg.run.warmup_s = 120;
  cfg.run.replications = 2;
  return cfg;
}

}  // namespace

TEST_CASE("arbit range parsing") {
  auto r = parse_arbit_range("4500:6000:500");
  CHECK(r.levels().size() == 4);
  CHECK(r.levels().back().value() == 6000);
  CHECK(parse_arbit_range("6000:6000:1").levels().size() == 1);
  CHECK(parse_arbit_range("0:1:0.1").levels().size() == 11);
  for (const char* bad : {"", "4500", "4500:6000", "a:b:c", "6000:4500:500", "4500:6000:0",
                          "4500:6000:-1", "1:2:3:4", "-5:10:1"}) {
    CHECK_THROWS_AS(parse_arbit_range(bad), std::invalid_argument);
  }
}

TEST_CASE("scheme list parsing") {
  CHECK(parse_schemes("both").size() == 2);
  CHECK(parse_schemes("proposed,traditional") ==
        std::vector{Scheme::kTraditional, Scheme::kProposed});
  CHECK(parse_schemes("proposed") == std::vector{Scheme::kProposed});
  CHECK_THROWS_AS(parse_schemes("wfq"), std::invalid_argument);
  CHECK_THROWS_AS(parse_schemes(""), std::invalid_argument);
}

TEST_CASE("summary CSV format") {
  femtobb::sim::SchemeSummary row{Scheme::kProposed, Kbps(5500), 0.97, 0.01, 0.94, 0.002, 20};
  std::ostringstream out;
  write_summary_csv(std::vector{row}, out);
  CHECK(out.str() ==
        "scheme,arbit_kbps,mean_sl,std_sl,mean_util,std_util,replications\n"
        "proposed,5500.000,0.970000,0.010000,0.940000,0.002000,20\n");
}

TEST_CASE("run command writes summary, timeseries and history") {
  const auto dir = std::filesystem::temp_directory_path() / "femtobb_run_cmd";
  std::filesystem::create_directories(dir);
  const Scheme both[] = {Scheme::kTraditional, Scheme::kProposed};
  std::ostringstream sink;
  const auto rows =
      run_command(quick(), both, {dir / "s.csv", dir / "ts.csv", dir / "h.csv"}, sink);
  CHECK(rows.size() == 2);
  CHECK(sink.str().empty());

  std::istringstream summary(slurp(dir / "s.csv"));
  std::string line;
  int lines = 0;
  while (std::getline(summary, line)) ++lines;
  CHECK(lines == 3);

  const auto ts = slurp(dir / "ts.csv");
  CHECK(ts.rfind(std::string(kTimeseriesHeader) + "\n", 0) == 0);
  std::size_t ts_lines = 0;
  for (char ch : ts) ts_lines += ch == '\n';
  CHECK(ts_lines == 1 + 2 * 720);
  CHECK(slurp(dir / "h.csv").rfind("t,b_f,b_i,b_r,scheme\n", 0) == 0);

  // Identical inputs, identical bytes.
  run_command(quick(), both, {dir / "s2.csv", {}, {}}, sink);
  CHECK(slurp(dir / "s.csv") == slurp(dir / "s2.csv"));

  // Summary to the sink when no path is given.
  std::ostringstream captured;
  run_command(quick(), both, {}, captured);
  CHECK(captured.str() == slurp(dir / "s.csv"));

  CHECK_THROWS_AS(run_command(quick(), both, {dir / "no-such-dir" / "x.csv", {}, {}}, sink),
                  femtobb::IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("sweep command writes the table and util/SL companion") {
  const auto dir = std::filesystem::temp_directory_path() / "femtobb_sweep_cmd";
  std::filesystem::create_directories(dir);
  const Scheme both[] = {Scheme::kTraditional, Scheme::kProposed};
  std::ostringstream sink;
  const auto levels = parse_arbit_range("4500:6000:500").levels();
  const auto rows = sweep_command(quick(), levels, both, dir / "sweep.csv", sink);
  CHECK(rows.size() == 8);
  CHECK(util_sl_path(dir / "sweep.csv") == dir / "sweep_util_sl.csv");
  const auto pairs = slurp(dir / "sweep_util_sl.csv");
  CHECK(pairs.rfind(std::string(kUtilSlHeader) + "\n", 0) == 0);
  std::size_t n = 0;
  for (char ch : pairs) n += ch == '\n';
  CHECK(n == 9);
  std::filesystem::remove_all(dir);
}
