// Copyright 2026 The Edgeplan Authors.
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

#include <doctest.h>

#include <map>
#include <utility>

#include "edgeplan/errors.hpp"
#include "edgeplan/offline.hpp"
#include "edgeplan/online.hpp"
#include "support.hpp"

namespace edgeplan {
namespace {

PricingConfig SmallConfig(std::int64_t tau, std::int64_t w, std::int64_t gamma) {
  return PricingConfig::Create({.on_demand_price = Micros(3),
                                .reserved_usage_price = Micros(0),
                                .upfront_price = Micros(gamma),
                                .edge_unit_cost = Micros(1),
                                .reservation_period = tau,
                                .edge_capacity = w});
}

// Straightforward restatement of the online rule over a whole trace.
ReservationPlan ReferenceOnlinePlan(const DemandTrace& trace, const PricingConfig& config) {
  const std::int64_t tau = config.reservation_period();
  const std::int64_t w = config.edge_capacity();
  const std::int64_t gamma = config.upfront_price().micros();
  const std::int64_t lambda = config.normalized_edge().micros();
  const std::int64_t p = config.normalized_on_demand().micros();
  const std::int64_t horizon = trace.horizon();
  ReservationPlan plan(static_cast<std::size_t>(horizon), 0);
  auto active = [&](std::int64_t t) {
    std::int64_t n = 0;
    for (std::int64_t i = std::max<std::int64_t>(0, t - tau + 1); i <= t; ++i) n += plan[i];
    return n;
  };
  for (std::int64_t t = 0; t < horizon; ++t) {
    const std::int64_t start = t / tau * tau;
    const std::int64_t end = std::min(start + tau, horizon);
    for (std::int64_t l = 1; l <= trace[t]; ++l) {
      std::int64_t s_l = 0;
      std::int64_t s_lw = 0;
      for (std::int64_t i = start; i <= t; ++i) {
        s_l += trace[i] >= l;
        s_lw += trace[i] >= l + w;
      }
      if (gamma > lambda * s_l + (p - lambda) * s_lw) break;
      for (std::int64_t s = t; s < end; ++s) {
        if (active(s) < l) {
          ++plan[s];
          break;
        }
      }
    }
  }
  return plan;
}

TEST_CASE("hand-traced reservations") {
  OnlinePlanner planner(SmallConfig(4, 1, 4));
  // t=0: level 1 gives 1*1 + 2*1 = 3 < 4.
  CHECK(planner.Step(2) == Allocation{0, 1, 1});
  CHECK(planner.triggers().empty());
  // t=1: level 1 gives 1*2 + 2*2 = 6 >= 4; level 2 gives 1*2 + 2*0 = 2 < 4.
  CHECK(planner.Step(2) == Allocation{1, 1, 0});
  REQUIRE(planner.triggers().size() == 1);
  CHECK(planner.triggers()[0].slot == 1);
  CHECK(planner.triggers()[0].level == 1);
  CHECK(planner.triggers()[0].start == 1);
  // t=2: level 1 already covered; level 2 gives 3 < 4.
  planner.Step(2);
  CHECK(planner.triggers().size() == 1);
  // t=3: level 2 gives 1*4 + 0 = 4, a tie, which reserves.
  planner.Step(2);
  CHECK(planner.triggers().size() == 2);
  CHECK(std::vector<std::int64_t>(planner.reservations().begin(), planner.reservations().begin() + 4) ==
        std::vector<std::int64_t>{0, 1, 0, 1});
}

TEST_CASE("zero demand only advances time") {
  OnlinePlanner planner(SmallConfig(2, 1, 0));
  CHECK(planner.Step(0) == Allocation{0, 0, 0});
  CHECK(planner.triggers().empty());
  CHECK(planner.slot() == 1);
  CHECK_THROWS_AS(planner.Step(-1), InvalidParameter);
}

TEST_CASE("matches the restated rule on random traces") {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t tau = rng.UniformInt(1, 6);
    const DemandTrace trace(testing::RandomDemand(rng, tau * rng.UniformInt(1, 4), 6));
    const PricingConfig config = testing::RandomPricing(rng, tau, i % 3 == 0 ? 0 : 4);
    const OnlineResult result = RunOnline(trace, config);
    CHECK(result.plan == ReferenceOnlinePlan(trace, config));
  }
}

TEST_CASE("without edge capacity the threshold is p times the level count") {
  const PricingConfig config = SmallConfig(6, 0, 7);
  // p * count reaches 7 at the third slot of level 1.
  const OnlineResult result = RunOnline(DemandTrace({1, 1, 1, 1, 1, 1}), config);
  CHECK(result.plan == ReservationPlan{0, 0, 1, 0, 0, 0});
}

TEST_CASE("past reservations never change") {
  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    const std::int64_t tau = rng.UniformInt(1, 6);
    const PricingConfig config = testing::RandomPricing(rng, tau, 3);
    OnlinePlanner planner(config);
    std::vector<std::int64_t> seen;
    for (int t = 0; t < 40; ++t) {
      planner.Step(rng.UniformInt(0, 6));
      seen.push_back(planner.reservations()[static_cast<std::size_t>(t)]);
      for (std::size_t s = 0; s < seen.size(); ++s) REQUIRE(planner.reservations()[s] == seen[s]);
    }
  }
}

TEST_CASE("one reservation per level per interval") {
  Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t tau = rng.UniformInt(1, 8);
    const DemandTrace trace(testing::RandomDemand(rng, tau * rng.UniformInt(1, 4), 8));
    const PricingConfig config = testing::RandomPricing(rng, tau, 3);
    const OnlineResult result = RunOnline(trace, config);
    std::map<std::pair<std::int64_t, std::int64_t>, int> per_level;
    std::int64_t bought = 0;
    for (const ReservationTrigger& trigger : result.triggers) {
      CHECK(++per_level[{trigger.slot / tau, trigger.level}] == 1);
      CHECK(trigger.start >= trigger.slot);
      CHECK(trigger.start / tau == trigger.slot / tau);
    }
    for (std::int64_t r : result.plan) bought += r;
    CHECK(bought == static_cast<std::int64_t>(result.triggers.size()));
  }
}

TEST_CASE("decisions depend only on the past") {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const std::int64_t tau = rng.UniformInt(1, 6);
    const std::vector<std::int64_t> demand = testing::RandomDemand(rng, 30, 5);
    const PricingConfig config = testing::RandomPricing(rng, tau, 3);
    const OnlineResult full = RunOnline(DemandTrace(demand), config);
    for (std::size_t len = 1; len <= demand.size(); ++len) {
      const OnlineResult prefix = RunOnline(DemandTrace({demand.begin(), demand.begin() + len}), config);
      for (std::size_t t = 0; t < len; ++t) REQUIRE(prefix.plan[t] == full.plan[t]);
    }
  }
}

TEST_CASE("replaying the plan reproduces the schedule and cost") {
  Rng rng(37);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t tau = rng.UniformInt(1, 6);
    const DemandTrace trace(testing::RandomDemand(rng, rng.UniformInt(1, 25), 6));
    const PricingConfig config = testing::RandomPricing(rng, tau, 3);
    const OnlineResult result = RunOnline(trace, config);
    const DemandTrace padded = PadToPeriod(trace, tau);
    CHECK(result.schedule == Allocate(padded, result.plan, config));
    CHECK(result.cost == EvaluateCost(padded, result.plan, config));
    CHECK(testing::ScheduleViolation(padded.demands(), result.plan, result.schedule, tau, config.edge_capacity()) ==
          "");
  }
}

TEST_CASE("cheap intervals cost no more online than offline") {
  Rng rng(41);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const std::int64_t tau = rng.UniformInt(1, 5);
    const DemandTrace trace(testing::RandomDemand(rng, tau * rng.UniformInt(2, 5), 5));
    const PricingConfig config = testing::RandomPricing(rng, tau, 3);
    const OnlineResult online = RunOnline(trace, config);
    const OfflineResult offline = PlanOffline(trace, config);
    for (std::int64_t k = 0; k * tau < trace.horizon(); ++k) {
      if (offline.reserved_per_interval[static_cast<std::size_t>(k)] != 0) continue;
      std::int64_t carried = 0;
      for (std::int64_t s = std::max<std::int64_t>(0, k * tau - tau + 1); s < k * tau; ++s) carried += online.plan[s];
      if (carried != 0) continue;
      ++checked;
      CHECK(IntervalCost(trace, online.plan, config, k) <= IntervalCost(trace, offline.plan, config, k));
    }
  }
  CHECK(checked > 100);
}

}  // namespace
}  // namespace edgeplan
