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

#include "edgeplan/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "edgeplan/errors.hpp"

namespace edgeplan {

PricingConfig PricingConfig::Create(const PricingTerms& terms) {
  if (terms.reserved_usage_price < Money()) {
    throw RegimeViolation("reserved usage price must be non-negative");
  }
  if (terms.reserved_usage_price >= terms.edge_unit_cost) {
    throw RegimeViolation("reserved usage price " + terms.reserved_usage_price.ToDollarString() +
                          " >= edge unit cost " + terms.edge_unit_cost.ToDollarString() +
                          ": edge dominates reserved usage, problem reduces to the edge-free case");
  }
  if (terms.edge_unit_cost >= terms.on_demand_price) {
    throw RegimeViolation("edge unit cost " + terms.edge_unit_cost.ToDollarString() + " >= on-demand price " +
                          terms.on_demand_price.ToDollarString() + ": edge never used");
  }
  if (terms.reservation_period < 1) {
    throw InvalidParameter("reservation period must be positive, got " + std::to_string(terms.reservation_period));
  }
  if (terms.upfront_price < Money()) throw InvalidParameter("upfront price must be non-negative");
  if (terms.edge_capacity < 0) {
    throw InvalidParameter("edge capacity must be non-negative, got " + std::to_string(terms.edge_capacity));
  }
  return PricingConfig(terms);
}

PricingConfig PricingConfig::ReferenceMarket(std::int64_t edge_capacity) {
  return Create({.on_demand_price = Micros(67'000),
                 .reserved_usage_price = Micros(0),
                 .upfront_price = Micros(1'045'200),
                 .edge_unit_cost = Micros(30'000),
                 .reservation_period = 168,
                 .edge_capacity = edge_capacity});
}

PricingConfig PricingConfig::WithEdgeCapacity(std::int64_t w) const {
  PricingTerms terms = terms_;
  terms.edge_capacity = w;
  return Create(terms);
}

PricingConfig PricingConfig::WithPeriod(std::int64_t tau, Money upfront) const {
  PricingTerms terms = terms_;
  terms.reservation_period = tau;
  terms.upfront_price = upfront;
  return Create(terms);
}

PricingConfig ValidateConfig(const PricingTerms& terms) { return PricingConfig::Create(terms); }

DemandTrace::DemandTrace(std::vector<std::int64_t> demands) : demands_(std::move(demands)) {
  if (demands_.empty()) throw EmptyInput("demand trace is empty");
  for (std::size_t t = 0; t < demands_.size(); ++t) {
    if (demands_[t] < 0) {
      throw InvalidParameter("negative demand " + std::to_string(demands_[t]) + " at slot " + std::to_string(t));
    }
  }
}

std::int64_t DemandTrace::peak() const { return *std::max_element(demands_.begin(), demands_.end()); }

std::int64_t DemandTrace::total() const { return std::accumulate(demands_.begin(), demands_.end(), std::int64_t{0}); }

DemandTrace PadToPeriod(const DemandTrace& trace, std::int64_t tau) {
  if (tau < 1) throw InvalidParameter("reservation period must be positive");
  const std::int64_t horizon = trace.horizon();
  const std::int64_t padded = (horizon + tau - 1) / tau * tau;
  std::vector<std::int64_t> demands(trace.demands().begin(), trace.demands().end());
  demands.resize(static_cast<std::size_t>(padded), 0);
  return DemandTrace(std::move(demands));
}

AllocationTotals Totals(std::span<const Allocation> schedule) {
  AllocationTotals totals;
  for (const Allocation& a : schedule) {
    totals.reserved += a.reserved;
    totals.edge += a.edge;
    totals.on_demand += a.on_demand;
  }
  return totals;
}

std::vector<std::int64_t> ActiveReservations(std::span<const std::int64_t> plan, std::int64_t tau) {
  std::vector<std::int64_t> active(plan.size(), 0);
  std::int64_t window = 0;
  for (std::size_t t = 0; t < plan.size(); ++t) {
    window += plan[t];
    if (static_cast<std::int64_t>(t) >= tau) window -= plan[t - static_cast<std::size_t>(tau)];
    active[t] = window;
  }
  return active;
}

Allocation AllocateSlot(std::int64_t demand, std::int64_t active, std::int64_t edge_capacity) {
  Allocation a;
  a.reserved = std::min(active, demand);
  a.edge = std::min(std::max<std::int64_t>(demand - active, 0), edge_capacity);
  a.on_demand = std::max<std::int64_t>(demand - a.edge - active, 0);
  return a;
}

AllocationSchedule Allocate(const DemandTrace& trace, std::span<const std::int64_t> plan,
                            const PricingConfig& config) {
  if (static_cast<std::int64_t>(plan.size()) != trace.horizon()) {
    throw LengthMismatch("plan has " + std::to_string(plan.size()) + " slots but trace has " +
                         std::to_string(trace.horizon()));
  }
  const auto active = ActiveReservations(plan, config.reservation_period());
  AllocationSchedule schedule;
  schedule.reserve(plan.size());
  for (std::size_t t = 0; t < plan.size(); ++t) {
    schedule.push_back(AllocateSlot(trace.demands()[t], active[t], config.edge_capacity()));
  }
  return schedule;
}

CostBreakdown ScheduleCost(std::span<const std::int64_t> plan, std::span<const Allocation> schedule,
                           const PricingConfig& config, std::int64_t first, std::int64_t last) {
  if (plan.size() != schedule.size()) {
    throw LengthMismatch("plan has " + std::to_string(plan.size()) + " slots but schedule has " +
                         std::to_string(schedule.size()));
  }
  if (first < 0 || last < first || last > static_cast<std::int64_t>(plan.size())) {
    throw InvalidParameter("slot range [" + std::to_string(first) + ", " + std::to_string(last) +
                           ") outside the plan");
  }
  std::int64_t reservations = 0;
  AllocationTotals used;
  for (auto t = static_cast<std::size_t>(first); t < static_cast<std::size_t>(last); ++t) {
    reservations += plan[t];
    used.reserved += schedule[t].reserved;
    used.edge += schedule[t].edge;
    used.on_demand += schedule[t].on_demand;
  }
  CostBreakdown cost;
  cost.reservation_cost = config.upfront_price() * reservations;
  cost.edge_cost = config.edge_unit_cost() * used.edge;
  cost.on_demand_cost = config.on_demand_price() * used.on_demand;
  cost.reserved_usage_cost = config.reserved_usage_price() * used.reserved;
  cost.raw_total = cost.reservation_cost + cost.edge_cost + cost.on_demand_cost + cost.reserved_usage_cost;
  cost.normalized_objective = config.normalized_edge() * used.edge + config.normalized_on_demand() * used.on_demand +
                              cost.reservation_cost;
  return cost;
}

CostBreakdown ScheduleCost(std::span<const std::int64_t> plan, std::span<const Allocation> schedule,
                           const PricingConfig& config) {
  return ScheduleCost(plan, schedule, config, 0, static_cast<std::int64_t>(plan.size()));
}

CostBreakdown EvaluateCost(const DemandTrace& trace, std::span<const std::int64_t> plan,
                           const PricingConfig& config, std::int64_t first, std::int64_t last) {
  const AllocationSchedule schedule = Allocate(trace, plan, config);
  return ScheduleCost(plan, schedule, config, first, last);
}

CostBreakdown EvaluateCost(const DemandTrace& trace, std::span<const std::int64_t> plan,
                           const PricingConfig& config) {
  return EvaluateCost(trace, plan, config, 0, trace.horizon());
}

LevelView::LevelView(const DemandTrace& trace, std::int64_t tau)
    : demands_(trace.demands().begin(), trace.demands().end()), tau_(tau) {
  if (tau < 1) throw InvalidParameter("reservation period must be positive");

  // Histogram of demand values, then a suffix sum: u^l = #{t : d_t >= l}.
  auto suffix_counts = [](std::span<const std::int64_t> slots) {
    std::int64_t peak = 0;
    for (std::int64_t d : slots) peak = std::max(peak, d);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(peak), 0);
    for (std::int64_t d : slots) {
      if (d > 0) ++counts[static_cast<std::size_t>(d - 1)];
    }
    for (std::size_t i = counts.size(); i-- > 1;) counts[i - 1] += counts[i];
    return counts;
  };

  utilization_ = suffix_counts(demands_);
  const std::size_t period = static_cast<std::size_t>(tau);
  for (std::size_t start = 0; start < demands_.size(); start += period) {
    const std::size_t len = std::min(period, demands_.size() - start);
    interval_utilization_.push_back(suffix_counts(std::span(demands_).subspan(start, len)));
  }
}

bool LevelView::Indicator(std::int64_t t, std::int64_t level) const {
  return demands_[static_cast<std::size_t>(t)] >= level;
}

std::int64_t LevelView::Utilization(std::int64_t level) const {
  if (level < 1 || level > peak()) return 0;
  return utilization_[static_cast<std::size_t>(level - 1)];
}

std::int64_t LevelView::IntervalUtilization(std::int64_t k, std::int64_t level) const {
  const auto& u = interval_utilization_.at(static_cast<std::size_t>(k));
  if (level < 1 || level > static_cast<std::int64_t>(u.size())) return 0;
  return u[static_cast<std::size_t>(level - 1)];
}

std::span<const std::int64_t> LevelView::IntervalUtilizations(std::int64_t k) const {
  return interval_utilization_.at(static_cast<std::size_t>(k));
}

LevelView BuildLevelView(const DemandTrace& trace, std::int64_t tau) { return LevelView(trace, tau); }

namespace {

std::pair<std::int64_t, std::int64_t> IntervalBounds(std::int64_t horizon, std::int64_t tau, std::int64_t k) {
  const std::int64_t first = k * tau;
  if (k < 0 || first >= horizon) {
    throw InvalidParameter("interval " + std::to_string(k) + " outside a horizon of " + std::to_string(horizon));
  }
  return {first, std::min(first + tau, horizon)};
}

}  // namespace

Money IntervalCost(const DemandTrace& trace, std::span<const std::int64_t> plan, const PricingConfig& config,
                   std::int64_t k) {
  const auto [first, last] = IntervalBounds(trace.horizon(), config.reservation_period(), k);
  return EvaluateCost(trace, plan, config, first, last).normalized_objective;
}

Money PerLevelIntervalCost(const DemandTrace& trace, std::span<const std::int64_t> plan,
                           const PricingConfig& config, std::int64_t k, std::int64_t level) {
  if (static_cast<std::int64_t>(plan.size()) != trace.horizon()) {
    throw LengthMismatch("plan and trace lengths differ");
  }
  if (level < 1) throw InvalidParameter("demand levels start at 1");
  const auto [first, last] = IntervalBounds(trace.horizon(), config.reservation_period(), k);
  const auto active = ActiveReservations(plan, config.reservation_period());
  const std::int64_t w = config.edge_capacity();

  std::int64_t reserved_slots = 0;
  std::int64_t edge_slots = 0;
  std::int64_t on_demand_slots = 0;
  for (std::int64_t t = first; t < last; ++t) {
    const auto i = static_cast<std::size_t>(t);
    if (plan[i] >= level) ++reserved_slots;
    if (trace[t] < level) continue;
    if (active[i] < level && level <= active[i] + w) ++edge_slots;
    if (level > active[i] + w) ++on_demand_slots;
  }
  return config.upfront_price() * reserved_slots + config.normalized_edge() * edge_slots +
         config.normalized_on_demand() * on_demand_slots;
}

}  // namespace edgeplan
