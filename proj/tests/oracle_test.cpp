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

#include <algorithm>

#include "edgeplan/baselines.hpp"
#include "edgeplan/errors.hpp"
#include "edgeplan/offline.hpp"
#include "edgeplan/oracle.hpp"
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

TEST_CASE("free reservations cost nothing") {
  const DemandTrace trace({2, 0, 3, 1, 1});
  const OracleResult result = OptimalExhaustive(trace, SmallConfig(2, 1, 0));
  CHECK(result.objective == Money());
  CHECK(testing::ReferenceCost(trace, result.plan, SmallConfig(2, 1, 0)).normalized == 0);
}

TEST_CASE("prohibitive reservations fall back to edge and on-demand") {
  const DemandTrace trace({2, 0, 3, 1});
  // p * tau * peak + 1
  const PricingConfig config = SmallConfig(2, 1, 3 * 2 * 3 + 1);
  const OracleResult result = OptimalExhaustive(trace, config);
  CHECK(result.plan == ReservationPlan(4, 0));
  CHECK(result.objective == EdgePlusOnDemand(trace, config).cost.normalized_objective);
}

TEST_CASE("small instance against full enumeration") {
  const DemandTrace trace({3, 0, 3, 0});
  const PricingConfig config = SmallConfig(2, 1, 2);
  ReservationPlan best;
  const std::int64_t expected = testing::BruteForceOptimum(trace, config, 3, &best);
  const OracleResult result = OptimalExhaustive(trace, config);
  CHECK(result.objective.micros() == expected);
  CHECK(testing::ReferenceCost(trace, result.plan, config).normalized == expected);
}

TEST_CASE("pruned search equals full enumeration") {
  Rng rng(59);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t tau = rng.UniformInt(1, 4);
    const std::int64_t peak = rng.UniformInt(0, 3);
    std::int64_t horizon = rng.UniformInt(1, 8);
    std::int64_t plans = 1;
    for (std::int64_t t = 0; t < horizon; ++t) plans *= peak + 1;
    if (plans > 10'000) continue;
    const DemandTrace trace(testing::RandomDemand(rng, horizon, peak));
    const PricingConfig config = testing::RandomPricing(rng, tau, 3);
    const OracleResult result = OptimalExhaustive(trace, config);
    CHECK(result.objective.micros() == testing::BruteForceOptimum(trace, config, trace.peak()));
    CHECK(result.plan.size() == static_cast<std::size_t>(horizon));
  }
}

TEST_CASE("interval-aligned optimum") {
  CHECK(OptimalIntervalAligned(DemandTrace({1, 2, 1}), SmallConfig(3, 0, 1000)).plan == ReservationPlan{0, 0, 0});
  // gamma < lambda * tau: r = c beats every smaller count.
  CHECK(OptimalIntervalAligned(DemandTrace({4, 4, 4}), SmallConfig(3, 1, 2)).plan == ReservationPlan{4, 0, 0});

  Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t tau = rng.UniformInt(1, 4);
    const DemandTrace trace(testing::RandomDemand(rng, tau * rng.UniformInt(1, 8 / tau), 3));
    const PricingConfig config = testing::RandomPricing(rng, tau, 3);
    const OracleResult aligned = OptimalIntervalAligned(trace, config);
    const OracleResult exact = OptimalExhaustive(trace, config);
    CHECK(aligned.objective.micros() == testing::BruteForceAlignedOptimum(trace, config));
    CHECK(exact.objective <= aligned.objective);
    CHECK(aligned.objective <= exact.objective * 2);
  }
}

TEST_CASE("unit period optimum ignores slot order") {
  Rng rng(67);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::int64_t> demand = testing::RandomDemand(rng, rng.UniformInt(1, 8), 3);
    const PricingConfig config = testing::RandomPricing(rng, 1, 3);
    const Money before = OptimalExhaustive(DemandTrace(demand), config).objective;
    rng.Shuffle(std::span<std::int64_t>(demand));
    CHECK(OptimalExhaustive(DemandTrace(demand), config).objective == before);
  }
}

TEST_CASE("budget is checked before searching") {
  const DemandTrace trace(std::vector<std::int64_t>(20, 3));
  CHECK_THROWS_AS(OptimalExhaustive(trace, SmallConfig(2, 1, 2)), BudgetExceeded);
  CHECK_THROWS_AS(OptimalExhaustive(DemandTrace({1, 1, 1}), SmallConfig(1, 0, 1), 7), BudgetExceeded);
  CHECK_NOTHROW(OptimalExhaustive(DemandTrace({1, 1, 1}), SmallConfig(1, 0, 1), 8));
}

}  // namespace
}  // namespace edgeplan
