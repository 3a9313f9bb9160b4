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

#include "edgeplan/baselines.hpp"
#include "edgeplan/offline.hpp"
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

TEST_CASE("pure on-demand") {
  const PricingConfig market = PricingConfig::ReferenceMarket(2);
  const PlanResult result = PureOnDemand(DemandTrace({3, 3}), market);
  CHECK(result.cost.raw_total == Money::ParseDollars("0.402"));
  CHECK(result.schedule[0] == Allocation{0, 0, 3});
  CHECK(PureOnDemand(DemandTrace({0, 0}), market).cost.raw_total == Money());

  const PricingConfig config = SmallConfig(3, 2, 1);
  const DemandTrace trace({4, 0, 7, 1});
  CHECK(PureOnDemand(trace, config).cost.normalized_objective == config.normalized_on_demand() * trace.total());
}

TEST_CASE("edge then on-demand") {
  const PricingConfig config = SmallConfig(1, 2, 1);
  CHECK(EdgePlusOnDemand(DemandTrace({5}), config).schedule[0] == Allocation{0, 2, 3});

  const DemandTrace trace({1, 4, 2});
  const PlanResult all_edge = EdgePlusOnDemand(trace, SmallConfig(3, 4, 1));
  CHECK(all_edge.cost.raw_total == Micros(1) * trace.total());

  const PlanResult no_edge = EdgePlusOnDemand(trace, SmallConfig(3, 0, 1));
  const PlanResult on_demand = PureOnDemand(trace, SmallConfig(3, 0, 1));
  CHECK(no_edge.schedule == on_demand.schedule);
  CHECK(no_edge.cost == on_demand.cost);
}

TEST_CASE("sliding-window reservations") {
  // p = 3 < gamma = 4, and each level is hit once per window.
  const PlanResult spike = WangOnline(DemandTrace({5, 0, 0, 0, 0, 0}), SmallConfig(6, 0, 4));
  CHECK(spike.plan == ReservationPlan(6, 0));
  CHECK(spike.schedule[0] == Allocation{0, 0, 5});

  // Window count t + 1 first reaches gamma / p = 7 / 3 at t = 2, i.e. ceil(7/3) - 1.
  const PlanResult constant = WangOnline(DemandTrace(std::vector<std::int64_t>(12, 1)), SmallConfig(6, 0, 7));
  CHECK(constant.plan == ReservationPlan{0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0});

  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t tau = rng.UniformInt(1, 6);
    const DemandTrace trace(testing::RandomDemand(rng, rng.UniformInt(1, 30), 6));
    const PricingConfig config = testing::RandomPricing(rng, tau, 4);
    const PlanResult result = WangOnline(trace, config);
    for (const Allocation& a : result.schedule) CHECK(a.edge == 0);
    const DemandTrace padded = PadToPeriod(trace, tau);
    CHECK(testing::ScheduleViolation(padded.demands(), result.plan, result.schedule, tau, 0) == "");
    CHECK(result.cost.raw_total.micros() == testing::ReferenceCost(padded, result.plan, config.WithEdgeCapacity(0)).raw);
  }
}

TEST_CASE("edge then sliding window") {
  const DemandTrace trace({2, 3, 1, 3});
  const PlanResult all_edge = EdgePlusWang(trace, SmallConfig(2, 3, 1));
  CHECK(all_edge.cost.raw_total == Micros(1) * trace.total());
  CHECK(all_edge.plan == ReservationPlan(4, 0));

  const PlanResult same = EdgePlusWang(trace, SmallConfig(2, 0, 2));
  const PlanResult wang = WangOnline(trace, SmallConfig(2, 0, 2));
  CHECK(same.plan == wang.plan);
  CHECK(same.cost == wang.cost);

  Rng rng(47);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t tau = rng.UniformInt(1, 6);
    const DemandTrace raw_trace(testing::RandomDemand(rng, rng.UniformInt(1, 30), 6));
    const PricingConfig config = testing::RandomPricing(rng, tau, 4);
    const std::int64_t w = config.edge_capacity();
    const DemandTrace padded = PadToPeriod(raw_trace, tau);
    std::vector<std::int64_t> residual;
    std::int64_t edge_served = 0;
    for (std::int64_t d : padded.demands()) {
      residual.push_back(std::max<std::int64_t>(d - w, 0));
      edge_served += std::min(d, w);
    }
    const PlanResult result = EdgePlusWang(raw_trace, config);
    const PlanResult on_residual = WangOnline(DemandTrace(residual), config);
    CHECK(result.cost.raw_total == config.edge_unit_cost() * edge_served + on_residual.cost.raw_total);

    AllocationSchedule residual_part;
    for (std::size_t t = 0; t < result.schedule.size(); ++t) {
      CHECK(result.schedule[t].edge == std::min(padded.demands()[t], w));
      residual_part.push_back({result.schedule[t].reserved, 0, result.schedule[t].on_demand});
    }
    CHECK(testing::ScheduleViolation(residual, result.plan, residual_part, tau, 0) == "");
  }
}

TEST_CASE("offline never costs more than the reservation-free baselines") {
  Rng rng(53);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t tau = rng.UniformInt(1, 6);
    const DemandTrace trace(testing::RandomDemand(rng, rng.UniformInt(1, 30), 8));
    const PricingConfig config = testing::RandomPricing(rng, tau, 5);
    const Money offline = PlanOffline(trace, config).cost.raw_total;
    const Money edge = EdgePlusOnDemand(trace, config).cost.raw_total;
    const Money on_demand = PureOnDemand(trace, config).cost.raw_total;
    CHECK(offline <= edge);
    CHECK(edge <= on_demand);
  }
}

}  // namespace
}  // namespace edgeplan
