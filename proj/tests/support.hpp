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

// Test-only reference implementations. Nothing here calls the library's
// allocation or cost code, so the planners can be checked against it.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "edgeplan/model.hpp"
#include "edgeplan/random.hpp"

namespace edgeplan::testing {

struct ReferenceTotals {
  std::int64_t raw = 0;         // micro-dollars, every charge at its listed price
  std::int64_t normalized = 0;  // gamma, lambda, p form
};

// Evaluates a plan slot by slot straight from the definitions.
ReferenceTotals ReferenceCost(std::span<const std::int64_t> demand, std::span<const std::int64_t> plan,
                              const PricingConfig& config);
ReferenceTotals ReferenceCost(const DemandTrace& trace, std::span<const std::int64_t> plan,
                              const PricingConfig& config);

// Minimum normalized objective over every plan with 0 <= r_t <= max_reserve.
// Plain enumeration, no pruning.
std::int64_t BruteForceOptimum(const DemandTrace& trace, const PricingConfig& config, std::int64_t max_reserve,
                               ReservationPlan* best_plan = nullptr);

// Same, restricted to plans that only reserve at interval starts.
std::int64_t BruteForceAlignedOptimum(const DemandTrace& trace, const PricingConfig& config);

// Empty when `schedule` follows the allocation rule for `demand` under
// `plan` with edge capacity `capacity`; otherwise a description of the first
// broken slot.
std::string ScheduleViolation(std::span<const std::int64_t> demand, std::span<const std::int64_t> plan,
                              std::span<const Allocation> schedule, std::int64_t tau, std::int64_t capacity);

// Prices in the valid regime, in micro-dollars: theta 0..3, lambda' up to
// theta + 8, p' up to lambda' + 16, gamma up to 2 p tau.
PricingConfig RandomPricing(Rng& rng, std::int64_t tau, std::int64_t max_capacity);

std::vector<std::int64_t> RandomDemand(Rng& rng, std::int64_t horizon, std::int64_t max_demand);

}  // namespace edgeplan::testing
