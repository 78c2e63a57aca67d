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

// Exercises libfemtobb through the C header only.

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "femtobb/femtobb.h"

namespace {

struct Config {
  fbb_config* ptr = nullptr;
  ~Config() { fbb_config_destroy(ptr); }
};

}  // namespace

TEST_CASE("model functions") {
  CHECK(fbb_available_bandwidth(6000, 6500) == 0);
  CHECK(fbb_satisfaction_level(1500, 3000) == 0.5);
  CHECK(fbb_borrowed_bandwidth(500, 300) == 200);

  fbb_allocation a{};
  REQUIRE(fbb_allocate_proposed(6000, 6000, 400, 450, &a) == FBB_OK);
  CHECK(a.grant_femto == 450);
  CHECK(a.bg_served == 5550);
  CHECK(a.borrowed == 450);
  double util = 0;
  REQUIRE(fbb_utilization(&a, 6000, &util) == FBB_OK);
  CHECK(util == doctest::Approx(5950.0 / 6000.0));

  REQUIRE(fbb_allocate_traditional(6000, 5800, 400, &a) == FBB_OK);
  CHECK(a.sl == 0.5);

  CHECK(fbb_allocate_proposed(6000, 0, 0, 7000, &a) == FBB_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(fbb_last_error()) > 0);
  CHECK(fbb_allocate_traditional(-1, 0, 0, &a) == FBB_ERR_INVALID_ARGUMENT);
  CHECK(fbb_allocate_traditional(6000, 0, 0, nullptr) == FBB_ERR_INVALID_ARGUMENT);
  CHECK(fbb_utilization(&a, 0, &util) == FBB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("window handle") {
  fbb_window* w = nullptr;
  CHECK(fbb_window_create(2, 61, 1, 0, &w) == FBB_ERR_INVALID_ARGUMENT);
  CHECK(w == nullptr);
  REQUIRE(fbb_window_create(1, 3, 1, 250, &w) == FBB_OK);
  double r = -1;
  REQUIRE(fbb_window_reserve(w, &r) == FBB_OK);
  CHECK(r == 0);
  for (double v : {300.0, 200.0, 100.0, 100.0}) fbb_window_push(w, v);
  CHECK(fbb_window_size(w) == 3);
  fbb_window_reserve(w, &r);
  CHECK(r == doctest::Approx(400.0 / 3.0));
  fbb_window_push(w, 1000);
  fbb_window_reserve(w, &r);
  CHECK(r == 250);  // capped
  CHECK(fbb_window_push(w, -1) == FBB_ERR_INVALID_ARGUMENT);
  fbb_window_destroy(w);
  fbb_window_destroy(nullptr);
}

TEST_CASE("config lifecycle") {
  Config cfg;
  REQUIRE(fbb_config_parse(R"({"background":{"arbit_kbps":6000}})", &cfg.ptr) == FBB_OK);
  std::size_t needed = 0;
  CHECK(fbb_config_to_json(cfg.ptr, nullptr, 0, &needed) == FBB_ERR_BUFFER_TOO_SMALL);
  std::vector<char> buf(needed);
  REQUIRE(fbb_config_to_json(cfg.ptr, buf.data(), buf.size(), &needed) == FBB_OK);
  CHECK(std::string(buf.data()).find("\"arbit_kbps\": 6000.0") != std::string::npos);

  Config bad;
  CHECK(fbb_config_parse(R"({"window":{"T_s":61,"t1_s":2}})", &bad.ptr) == FBB_ERR_CONFIG);
  CHECK(bad.ptr == nullptr);
  CHECK(std::string(fbb_last_error()).find("window.T_s") != std::string::npos);
  CHECK(fbb_config_load("/no/such/config.json", &bad.ptr) == FBB_ERR_CONFIG);
  CHECK(fbb_config_set_run_length(cfg.ptr, 100, 200) == FBB_ERR_CONFIG);
  CHECK(fbb_config_set_replications(cfg.ptr, 0) == FBB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("experiment through the C API") {
  Config cfg;
  REQUIRE(fbb_config_default(&cfg.ptr) == FBB_OK);
  REQUIRE(fbb_config_set_run_length(cfg.ptr, 800, 200) == FBB_OK);
  REQUIRE(fbb_config_set_replications(cfg.ptr, 3) == FBB_OK);
  REQUIRE(fbb_config_set_arbit(cfg.ptr, 5500) == FBB_OK);

  std::size_t count = 0;
  CHECK(fbb_run_experiment(cfg.ptr, FBB_SCHEME_BOTH, nullptr, 0, &count) ==
        FBB_ERR_BUFFER_TOO_SMALL);
  CHECK(count == 2);
  fbb_summary_row rows[2];
  REQUIRE(fbb_run_experiment(cfg.ptr, FBB_SCHEME_BOTH, rows, 2, &count) == FBB_OK);
  CHECK(rows[0].scheme == FBB_SCHEME_TRADITIONAL);
  CHECK(rows[1].scheme == FBB_SCHEME_PROPOSED);
  CHECK(rows[1].mean_sl >= rows[0].mean_sl);
  CHECK(rows[0].replications == 3);
  CHECK(rows[0].arbit_kbps == 5500);
  CHECK(fbb_run_experiment(cfg.ptr, 0, rows, 2, &count) == FBB_ERR_INVALID_ARGUMENT);
  CHECK(fbb_run_experiment(cfg.ptr, 8, rows, 2, &count) == FBB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("run, sweep and report through the C API") {
  const auto dir = std::filesystem::temp_directory_path() / "femtobb_c_api";
  std::filesystem::create_directories(dir);
  Config cfg;
  REQUIRE(fbb_config_default(&cfg.ptr) == FBB_OK);
  REQUIRE(fbb_config_set_run_length(cfg.ptr, 600, 100) == FBB_OK);
  REQUIRE(fbb_config_set_replications(cfg.ptr, 2) == FBB_OK);

  const auto summary = (dir / "summary.csv").string();
  const auto history = (dir / "history.csv").string();
  REQUIRE(fbb_run(cfg.ptr, FBB_SCHEME_PROPOSED, summary.c_str(), nullptr, history.c_str()) ==
          FBB_OK);
  CHECK(std::filesystem::exists(history));
  CHECK(fbb_run(cfg.ptr, FBB_SCHEME_BOTH, "/no/such/dir/s.csv", nullptr, nullptr) == FBB_ERR_IO);

  double start = 0, stop = 0, step = 0;
  REQUIRE(fbb_parse_arbit_range("5000:6000:500", &start, &stop, &step) == FBB_OK);
  CHECK(fbb_parse_arbit_range("6000:5000:500", &start, &stop, &step) ==
        FBB_ERR_INVALID_ARGUMENT);
  unsigned schemes = 0;
  REQUIRE(fbb_parse_schemes("traditional,proposed", &schemes) == FBB_OK);
  CHECK(schemes == FBB_SCHEME_BOTH);

  const auto sweep = (dir / "sweep.csv").string();
  REQUIRE(fbb_sweep(cfg.ptr, 5000, 6000, 500, schemes, sweep.c_str()) == FBB_OK);
  CHECK(std::filesystem::exists(dir / "sweep_util_sl.csv"));
  REQUIRE(fbb_report(sweep.c_str(), (dir / "charts").string().c_str()) == FBB_OK);
  CHECK(std::filesystem::exists(dir / "charts" / "summary.txt"));
  CHECK(fbb_report(summary.c_str(), (dir / "charts2").string().c_str()) == FBB_OK);

  {
    std::ofstream bogus(dir / "bogus.csv");
    bogus << "x,y\n1,2\n";
  }
  CHECK(fbb_report((dir / "bogus.csv").string().c_str(), dir.string().c_str()) == FBB_ERR_DATA);
  std::filesystem::remove_all(dir);
}
