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

// Runs the femtobb executable and checks exit codes and outputs.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

const fs::path kDir = fs::temp_directory_path() / "femtobb_cli_test";

int femtobb(const std::string& args) {
  const std::string cmd = std::string(FEMTOBB_CLI_PATH) + " " + args + " >" +
                          (kDir / "stdout.txt").string() + " 2>" +
                          (kDir / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

fs::path write(const std::string& name, const std::string& text) {
  std::ofstream(kDir / name) << text;
  return kDir / name;
}

struct Fixture {
  Fixture() {
    fs::remove_all(kDir);
    fs::create_directories(kDir);
    quick = write("quick.json",
                  R"({"run":{"duration_s":600,"warmup_s":100,"replications":2}})")
                .string();
  }
  ~Fixture() { fs::remove_all(kDir); }
  std::string quick;
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "help documents the defaults") {
  CHECK(femtobb("--help") == 0);
  const auto help = slurp(kDir / "stdout.txt");
  CHECK(help.find("6000") != std::string::npos);
  CHECK(help.find("14.4") != std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "usage errors exit 1") {
  CHECK(femtobb("") == 1);
  CHECK(femtobb("frobnicate") == 1);
  CHECK(femtobb("sweep " + quick) == 1);  // --arbit is required
}

TEST_CASE_FIXTURE(Fixture, "run writes two summary rows and is deterministic") {
  const auto a = (kDir / "a.csv").string();
  const auto b = (kDir / "b.csv").string();
  REQUIRE(femtobb("run " + quick + " --seed 7 --out " + a) == 0);
  REQUIRE(femtobb("run " + quick + " --seed 7 --out " + b) == 0);
  CHECK(count_lines(slurp(a)) == 3);
  CHECK(slurp(a) == slurp(b));
  REQUIRE(femtobb("run " + quick + " --seed 8 --out " + b) == 0);
  CHECK(slurp(a) != slurp(b));

  REQUIRE(femtobb("run " + quick + " --scheme proposed") == 0);
  CHECK(count_lines(slurp(kDir / "stdout.txt")) == 2);

  const auto ts = (kDir / "ts.csv").string();
  REQUIRE(femtobb("run " + quick + " --scheme traditional --out " + a + " --timeseries " + ts) ==
          0);
  const auto ts_text = slurp(ts);
  CHECK(ts_text.rfind("t,b_f,b_i,b_r,grant,femto_served,bg_served,sl,util,scheme\n", 0) == 0);
  CHECK(count_lines(ts_text) == 1 + 700);
}

TEST_CASE_FIXTURE(Fixture, "run error exit codes") {
  CHECK(femtobb("run " + (kDir / "missing.json").string()) == 1);
  CHECK(femtobb("run " + write("bad.json", R"({"window":{"T_s":61,"t1_s":2}})").string()) == 1);
  CHECK(slurp(kDir / "stderr.txt").find("window.T_s") != std::string::npos);
  CHECK(femtobb("run " + quick + " --scheme wfq") == 1);
  CHECK(femtobb("run " + quick + " --out /no/such/dir/out.csv") == 2);
}

TEST_CASE_FIXTURE(Fixture, "sweep and report") {
  const auto sweep = (kDir / "sweep.csv").string();
  REQUIRE(femtobb("sweep " + quick + " --arbit 4500:6000:500 --out " + sweep) == 0);
  CHECK(count_lines(slurp(sweep)) == 9);
  CHECK(fs::exists(kDir / "sweep_util_sl.csv"));

  REQUIRE(femtobb("sweep " + quick + " --arbit 6000:6000:1 --schemes proposed") == 0);
  CHECK(count_lines(slurp(kDir / "stdout.txt")) == 2);
  CHECK(femtobb("sweep " + quick + " --arbit 6000:4500:500") == 1);
  CHECK(femtobb("sweep " + quick + " --arbit nonsense") == 1);

  const auto out_dir = kDir / "charts";
  REQUIRE(femtobb("report " + sweep + " --out-dir " + out_dir.string()) == 0);
  int svgs = 0;
  for (const auto& entry : fs::directory_iterator(out_dir)) svgs += entry.path().extension() == ".svg";
  CHECK(svgs == 4);
  CHECK(fs::exists(out_dir / "summary.txt"));

  CHECK(femtobb("report " + write("hdr.csv", "what,is,this\n1,2,3\n").string() + " --out-dir " +
                out_dir.string()) == 1);
  CHECK(femtobb("report " +
                write("empty.csv",
                      "scheme,arbit_kbps,mean_sl,std_sl,mean_util,std_util,replications\n")
                    .string() +
                " --out-dir " + out_dir.string()) == 1);
  CHECK(slurp(kDir / "stderr.txt").find("no data") != std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "validate-config") {
  CHECK(femtobb("validate-config " + quick) == 0);
  CHECK(femtobb("validate-config " + write("empty.json", "{}").string() + " --print") == 0);
  CHECK(slurp(kDir / "stdout.txt").find("\"capacity_kbps\": 6000.0") != std::string::npos);
  CHECK(femtobb("validate-config " +
                write("multi.json", R"({"capacity_kbps":0,"window":{"m":0}})").string()) == 1);
  const auto err = slurp(kDir / "stderr.txt");
  CHECK(err.find("capacity_kbps") != std::string::npos);
  CHECK(err.find("window.m") != std::string::npos);
}
