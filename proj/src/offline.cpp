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

#include "edgeplan/offline.hpp"

namespace edgeplan {

std::int64_t ReserveCountForInterval(std::span<const std::int64_t> interval_utilization,
                                     const PricingConfig& config) {
  const Money lambda = config.normalized_edge();
  const Money on_demand_premium = config.normalized_on_demand() - lambda;
  const auto w = static_cast<std::size_t>(config.edge_capacity());
  auto utilization = [&](std::size_t level) -> std::int64_t {
    return level <= interval_utilization.size() ? interval_utilization[level - 1] : 0;
  };

  std::int64_t reserved = 0;
  for (std::size_t level = 1; level <= interval_utilization.size(); ++level) {
    // Levels nobody uses are never worth a reservation, even a free one.
    if (utilization(level) == 0) break;
    const Money saving = lambda * utilization(level) + on_demand_premium * utilization(level + w);
    if (config.upfront_price() > saving) break;
    ++reserved;
  }
  return reserved;
}

OfflineResult PlanOffline(const DemandTrace& trace, const PricingConfig& config) {
  const std::int64_t tau = config.reservation_period();
  const DemandTrace padded = PadToPeriod(trace, tau);
  const LevelView levels(padded, tau);

  OfflineResult result;
  result.plan.assign(static_cast<std::size_t>(padded.horizon()), 0);
  for (std::int64_t k = 0; k < levels.interval_count(); ++k) {
    const std::int64_t count = ReserveCountForInterval(levels.IntervalUtilizations(k), config);
    result.reserved_per_interval.push_back(count);
    result.plan[static_cast<std::size_t>(k * tau)] = count;
  }
  result.schedule = Allocate(padded, result.plan, config);
  result.cost = ScheduleCost(result.plan, result.schedule, config);
  return result;
}

}  // namespace edgeplan
