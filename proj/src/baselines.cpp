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

#include "edgeplan/baselines.hpp"

#include <algorithm>
#include <vector>

namespace edgeplan {

PlanResult PureOnDemand(const DemandTrace& trace, const PricingConfig& config) {
  const DemandTrace padded = PadToPeriod(trace, config.reservation_period());
  PlanResult result;
  result.plan.assign(static_cast<std::size_t>(padded.horizon()), 0);
  for (std::int64_t d : padded.demands()) result.schedule.push_back({.reserved = 0, .edge = 0, .on_demand = d});
  result.cost = ScheduleCost(result.plan, result.schedule, config);
  return result;
}

PlanResult EdgePlusOnDemand(const DemandTrace& trace, const PricingConfig& config) {
  const DemandTrace padded = PadToPeriod(trace, config.reservation_period());
  PlanResult result;
  result.plan.assign(static_cast<std::size_t>(padded.horizon()), 0);
  result.schedule = Allocate(padded, result.plan, config);
  result.cost = ScheduleCost(result.plan, result.schedule, config);
  return result;
}

namespace {

// Wang's reservation decisions over a fixed trace.
ReservationPlan SlidingWindowPlan(const DemandTrace& trace, const PricingConfig& config) {
  const std::int64_t tau = config.reservation_period();
  const std::int64_t horizon = trace.horizon();
  const Money p = config.normalized_on_demand();

  ReservationPlan plan(static_cast<std::size_t>(horizon), 0);
  std::vector<std::int64_t> active(static_cast<std::size_t>(horizon), 0);
  // window_counts[l-1]: slots in [t - tau + 1, t] with demand >= l.
  std::vector<std::int64_t> window_counts(static_cast<std::size_t>(trace.peak()), 0);

  for (std::int64_t t = 0; t < horizon; ++t) {
    for (std::int64_t l = 0; l < trace[t]; ++l) ++window_counts[static_cast<std::size_t>(l)];
    if (t >= tau) {
      for (std::int64_t l = 0; l < trace[t - tau]; ++l) --window_counts[static_cast<std::size_t>(l)];
    }
    const std::int64_t coverage_end = std::min(t + tau, horizon);
    for (std::int64_t level = 1; level <= trace[t]; ++level) {
      if (config.upfront_price() > p * window_counts[static_cast<std::size_t>(level - 1)]) break;
      for (std::int64_t start = t; start < coverage_end; ++start) {
        if (active[static_cast<std::size_t>(start)] < level) {
          ++plan[static_cast<std::size_t>(start)];
          for (std::int64_t s = start; s < std::min(start + tau, horizon); ++s) ++active[static_cast<std::size_t>(s)];
          break;
        }
      }
    }
  }
  return plan;
}

}  // namespace

PlanResult WangOnline(const DemandTrace& trace, const PricingConfig& config) {
  const DemandTrace padded = PadToPeriod(trace, config.reservation_period());
  const PricingConfig no_edge = config.WithEdgeCapacity(0);
  PlanResult result;
  result.plan = SlidingWindowPlan(padded, no_edge);
  result.schedule = Allocate(padded, result.plan, no_edge);
  result.cost = ScheduleCost(result.plan, result.schedule, config);
  return result;
}

PlanResult EdgePlusWang(const DemandTrace& trace, const PricingConfig& config) {
  const DemandTrace padded = PadToPeriod(trace, config.reservation_period());
  const std::int64_t w = config.edge_capacity();
  std::vector<std::int64_t> residual;
  residual.reserve(static_cast<std::size_t>(padded.horizon()));
  for (std::int64_t d : padded.demands()) residual.push_back(std::max<std::int64_t>(d - w, 0));

  PlanResult result = WangOnline(DemandTrace(std::move(residual)), config);
  for (std::size_t t = 0; t < result.schedule.size(); ++t) {
    result.schedule[t].edge = std::min(padded.demands()[t], w);
  }
  result.cost = ScheduleCost(result.plan, result.schedule, config);
  return result;
}

}  // namespace edgeplan
