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

#include "edgeplan/online.hpp"

#include <string>

#include "edgeplan/errors.hpp"

namespace edgeplan {

OnlinePlanner::OnlinePlanner(PricingConfig config) : config_(std::move(config)) {}

void OnlinePlanner::EnsureSlots(std::int64_t count) {
  if (static_cast<std::int64_t>(reservations_.size()) < count) {
    reservations_.resize(static_cast<std::size_t>(count), 0);
    active_.resize(static_cast<std::size_t>(count), 0);
  }
}

std::int64_t OnlinePlanner::ActiveAt(std::int64_t t) const {
  if (t < 0 || t >= static_cast<std::int64_t>(active_.size())) return 0;
  return active_[static_cast<std::size_t>(t)];
}

void OnlinePlanner::Reserve(std::int64_t start) {
  const std::int64_t tau = config_.reservation_period();
  EnsureSlots(start + tau);
  ++reservations_[static_cast<std::size_t>(start)];
  for (std::int64_t t = start; t < start + tau; ++t) ++active_[static_cast<std::size_t>(t)];
}

Allocation OnlinePlanner::Step(std::int64_t demand) {
  if (demand < 0) throw InvalidParameter("negative demand " + std::to_string(demand));
  const std::int64_t tau = config_.reservation_period();
  const std::int64_t t = slot_;
  const std::int64_t interval_end = (t / tau + 1) * tau;  // exclusive
  if (t % tau == 0) level_counts_.assign(level_counts_.size(), 0);
  EnsureSlots(interval_end);

  if (static_cast<std::int64_t>(level_counts_.size()) < demand) {
    level_counts_.resize(static_cast<std::size_t>(demand), 0);
  }
  for (std::int64_t l = 0; l < demand; ++l) ++level_counts_[static_cast<std::size_t>(l)];

  auto count = [&](std::int64_t level) -> std::int64_t {
    return level <= static_cast<std::int64_t>(level_counts_.size()) ? level_counts_[static_cast<std::size_t>(level - 1)]
                                                                      : 0;
  };
  const Money lambda = config_.normalized_edge();
  const Money on_demand_premium = config_.normalized_on_demand() - lambda;
  const std::int64_t w = config_.edge_capacity();

  for (std::int64_t level = 1; level <= demand; ++level) {
    const Money saving = lambda * count(level) + on_demand_premium * count(level + w);
    // The counts are non-increasing in the level, so no higher level fires.
    if (config_.upfront_price() > saving) break;
    for (std::int64_t start = t; start < interval_end; ++start) {
      if (active_[static_cast<std::size_t>(start)] < level) {
        Reserve(start);
        triggers_.push_back({.slot = t, .level = level, .start = start});
        break;
      }
    }
  }

  ++slot_;
  return AllocateSlot(demand, active_[static_cast<std::size_t>(t)], w);
}

OnlineResult RunOnline(const DemandTrace& trace, const PricingConfig& config) {
  const DemandTrace padded = PadToPeriod(trace, config.reservation_period());
  OnlinePlanner planner(config);
  OnlineResult result;
  result.schedule.reserve(static_cast<std::size_t>(padded.horizon()));
  for (std::int64_t d : padded.demands()) result.schedule.push_back(planner.Step(d));

  const auto committed = planner.reservations();
  result.plan.assign(committed.begin(), committed.begin() + padded.horizon());
  result.cost = ScheduleCost(result.plan, result.schedule, config);
  result.triggers.assign(planner.triggers().begin(), planner.triggers().end());
  return result;
}

}  // namespace edgeplan
