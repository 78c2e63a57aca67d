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

#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "femtobb/model.hpp"

using femtobb::Kbps;
using namespace femtobb::model;

namespace {

// Step-by-step restatement of the reservation rule, written without the
// library's helpers, used as an independent check.
struct OracleAllocation {
  double grant, femto, bg, borrowed, sl;
};

OracleAllocation oracle_proposed(double c, double b_i, double b_f, double b_r) {
  double residual = c - b_i;
  if (residual < 0) residual = 0;
  double grant = residual;
  if (b_r > grant) grant = b_r;
  if (grant > c) grant = c;
  double femto = b_f < grant ? b_f : grant;
  double held = b_r > femto ? b_r : femto;
  double left = c - held;
  if (left < 0) left = 0;
  double bg = b_i < left ? b_i : left;
  double borrowed = b_r > residual ? b_r - residual : 0;
  double sl = 1;
  if (b_f > 0 && grant < b_f) sl = grant / b_f;
  return {grant, femto, bg, borrowed, sl};
}

LinkSample sample(double b_i, double b_f) { return {0.0, Kbps(b_i), Kbps(b_f)}; }

}  // namespace

TEST_CASE("Kbps rejects negatives unless clamped") {
  CHECK_THROWS_AS(Kbps(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(Kbps(std::nan("")), std::invalid_argument);
  CHECK(Kbps::clamped(-5.0).value() == 0.0);
  CHECK(saturating_sub(Kbps(3), Kbps(5)).value() == 0.0);
}

TEST_CASE("available_bandwidth") {
  CHECK(available_bandwidth(Kbps(6000), Kbps(4500)).value() == 1500);
  CHECK(available_bandwidth(Kbps(6000), Kbps(6000)).value() == 0);
  CHECK(available_bandwidth(Kbps(6000), Kbps(6500)).value() == 0);
}

TEST_CASE("satisfaction_level") {
  CHECK(satisfaction_level(Kbps(1500), Kbps(1000)) == 1.0);
  CHECK(satisfaction_level(Kbps(1500), Kbps(3000)) == 0.5);
  CHECK(satisfaction_level(Kbps(0), Kbps(0)) == 1.0);
}

TEST_CASE("borrowed_bandwidth") {
  CHECK(borrowed_bandwidth(Kbps(500), Kbps(300)).value() == 200);
  CHECK(borrowed_bandwidth(Kbps(300), Kbps(500)).value() == 0);
  CHECK(borrowed_bandwidth(Kbps(0), Kbps(0)).value() == 0);
}

TEST_CASE("allocate_traditional") {
  const Kbps c(6000);
  SUBCASE("saturated link starves femtocell") {
    auto a = allocate_traditional(c, sample(6000, 400));
    CHECK(a.bg_served.value() == 6000);
    CHECK(a.femto_served.value() == 0);
    CHECK(a.sl == 0.0);
  }
  SUBCASE("spare capacity") {
    auto a = allocate_traditional(c, sample(4500, 400));
    CHECK(a.bg_served.value() == 4500);
    CHECK(a.femto_served.value() == 400);
    CHECK(a.sl == 1.0);
  }
  SUBCASE("partial") {
    auto a = allocate_traditional(c, sample(5800, 400));
    CHECK(a.grant_femto.value() == 200);
    CHECK(a.femto_served.value() == 200);
    CHECK(a.sl == 0.5);
    CHECK(a.borrowed.value() == 0);
  }
}

TEST_CASE("allocate_proposed examples agree with the step-by-step oracle") {
  const Kbps c(6000);
  struct Case {
    double b_i, b_f, b_r, grant, femto, bg, borrowed, sl;
  };
  // Frozen from oracle_proposed; re-derived below on every run.
  const Case cases[] = {
      {6000, 400, 450, 450, 400, 5550, 450, 1.0},
      {2000, 300, 450, 4000, 300, 2000, 0, 1.0},
      {0, 0, 450, 6000, 0, 0, 0, 1.0},
  };
  for (const auto& k : cases) {
    const auto o = oracle_proposed(6000, k.b_i, k.b_f, k.b_r);
    CHECK(o.grant == k.grant);
    CHECK(o.femto == k.femto);
    CHECK(o.bg == k.bg);
    CHECK(o.borrowed == k.borrowed);
    CHECK(o.sl == k.sl);

    const auto a = allocate_proposed(c, sample(k.b_i, k.b_f), Kbps(k.b_r));
    CHECK(a.grant_femto.value() == k.grant);
    CHECK(a.femto_served.value() == k.femto);
    CHECK(a.bg_served.value() == k.bg);
    CHECK(a.borrowed.value() == k.borrowed);
    CHECK(a.sl == k.sl);
  }
}

TEST_CASE("allocate_proposed rejects a reservation above capacity") {
  CHECK_THROWS_AS(allocate_proposed(Kbps(6000), sample(0, 0), Kbps(6000.5)),
                  std::invalid_argument);
  CHECK_NOTHROW(allocate_proposed(Kbps(6000), sample(0, 0), Kbps(6000)));
}

TEST_CASE("utilization") {
  Allocation a;
  a.femto_served = Kbps(400);
  a.bg_served = Kbps(5550);
  CHECK(utilization(a, Kbps(6000)) == doctest::Approx(5950.0 / 6000.0).epsilon(1e-15));
  CHECK(utilization(Allocation{}, Kbps(6000)) == 0.0);
  Allocation full;
  full.bg_served = Kbps(6000);
  CHECK(utilization(full, Kbps(6000)) == 1.0);
  CHECK_THROWS_AS(utilization(a, Kbps(0)), std::invalid_argument);
}

TEST_CASE("scheme names round trip") {
  for (auto s : {Scheme::kTraditional, Scheme::kProposed}) {
    CHECK(parse_scheme(to_string(s)) == s);
  }
  CHECK_FALSE(parse_scheme("wfq").has_value());
}

TEST_CASE("allocation properties over random inputs") {
  std::mt19937_64 rng(0xa110c);
  std::uniform_real_distribution<double> cap(1.0, 20000.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr int kCases = 5000;
  for (int i = 0; i < kCases; ++i) {
    const double c = cap(rng);
    // Demands up to twice capacity; sometimes exactly zero.
    const double b_i = unit(rng) < 0.1 ? 0.0 : 2.0 * c * unit(rng);
    const double b_f = unit(rng) < 0.1 ? 0.0 : 2.0 * c * unit(rng);
    const double b_r = unit(rng) < 0.1 ? 0.0 : c * unit(rng);
    const auto s = sample(b_i, b_f);
    const auto trad = allocate_traditional(Kbps(c), s);
    const auto prop = allocate_proposed(Kbps(c), s, Kbps(b_r));
    const double tol = 1e-9 * c;

    for (const auto& a : {trad, prop}) {
      REQUIRE(a.sl >= 0.0);
      REQUIRE(a.sl <= 1.0);
      const double u = utilization(a, Kbps(c));
      REQUIRE(u >= 0.0);
      REQUIRE(u <= 1.0);
      REQUIRE(a.total_served().value() <= c + tol);
      REQUIRE(a.femto_served <= a.grant_femto);
      REQUIRE(a.femto_served <= s.b_f);
    }
    // Dominance and work conservation of the baseline.
    REQUIRE(prop.sl >= trad.sl);
    REQUIRE(prop.grant_femto >= trad.grant_femto);
    REQUIRE(trad.total_served().value() ==
            doctest::Approx(std::min(c, b_i + b_f)).epsilon(1e-12));
    REQUIRE(prop.total_served().value() <= trad.total_served().value() + tol);

    // Reservation-free reduction.
    const auto zero = allocate_proposed(Kbps(c), s, Kbps(0));
    REQUIRE(zero.grant_femto == trad.grant_femto);
    REQUIRE(zero.femto_served == trad.femto_served);
    REQUIRE(zero.bg_served == trad.bg_served);
    REQUIRE(zero.borrowed == trad.borrowed);
    REQUIRE(zero.sl == trad.sl);

    // Oracle agreement.
    const auto o = oracle_proposed(c, b_i, b_f, b_r);
    REQUIRE(prop.grant_femto.value() == doctest::Approx(o.grant).epsilon(1e-12));
    REQUIRE(prop.bg_served.value() == doctest::Approx(o.bg).epsilon(1e-12));
    REQUIRE(prop.sl == doctest::Approx(o.sl).epsilon(1e-12));
  }
}

TEST_CASE("satisfaction_level is monotone") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(0.0, 1000.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = d(rng), da = d(rng), f = d(rng) + 1e-3, df = d(rng);
    REQUIRE(satisfaction_level(Kbps(a + da), Kbps(f)) >= satisfaction_level(Kbps(a), Kbps(f)));
    REQUIRE(satisfaction_level(Kbps(a), Kbps(f + df)) <= satisfaction_level(Kbps(a), Kbps(f)));
  }
}
