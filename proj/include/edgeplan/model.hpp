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

// Domain types and cost model shared by every planner and by the oracle.
//
// An edge node serves d_t VM requests per slot using, in strict priority
// order: remote reserved VMs still active at t, up to w local edge VMs, and
// remote on-demand VMs. A reservation bought at slot t costs an upfront fee
// and stays active for slots t..t+tau-1. Slots are 0-based throughout the
// API; demand levels are 1-based (level l is the l-th VM of demand).

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edgeplan/money.hpp"

namespace edgeplan {

// Unvalidated market parameters, as read from a config file.
struct PricingTerms {
  Money on_demand_price;       // p'
  Money reserved_usage_price;  // theta
  Money upfront_price;         // gamma
  Money edge_unit_cost;        // lambda'
  std::int64_t reservation_period = 1;
  std::int64_t edge_capacity = 0;
};

// A validated market. Construction enforces 0 <= theta < lambda' < p',
// tau >= 1, gamma >= 0 and w >= 0.
class PricingConfig {
 public:
  static PricingConfig Create(const PricingTerms& terms);

  // Hourly m3.medium prices with theta = 0 and a one-week period.
  static PricingConfig ReferenceMarket(std::int64_t edge_capacity);

  Money on_demand_price() const { return terms_.on_demand_price; }
  Money reserved_usage_price() const { return terms_.reserved_usage_price; }
  Money upfront_price() const { return terms_.upfront_price; }
  Money edge_unit_cost() const { return terms_.edge_unit_cost; }
  std::int64_t reservation_period() const { return terms_.reservation_period; }
  std::int64_t edge_capacity() const { return terms_.edge_capacity; }
  const PricingTerms& terms() const { return terms_; }

  // Extra cost of on-demand / edge service over reserved usage.
  Money normalized_on_demand() const { return terms_.on_demand_price - terms_.reserved_usage_price; }
  Money normalized_edge() const { return terms_.edge_unit_cost - terms_.reserved_usage_price; }

  PricingConfig WithEdgeCapacity(std::int64_t w) const;
  PricingConfig WithPeriod(std::int64_t tau, Money upfront) const;

 private:
  explicit PricingConfig(const PricingTerms& terms) : terms_(terms) {}

  PricingTerms terms_;
};

PricingConfig ValidateConfig(const PricingTerms& terms);

// Integer VM demand per slot. Never empty, never negative.
class DemandTrace {
 public:
  explicit DemandTrace(std::vector<std::int64_t> demands);

  std::span<const std::int64_t> demands() const { return demands_; }
  std::int64_t horizon() const { return static_cast<std::int64_t>(demands_.size()); }
  std::int64_t operator[](std::int64_t t) const { return demands_[static_cast<std::size_t>(t)]; }
  std::int64_t peak() const;
  std::int64_t total() const;

  friend bool operator==(const DemandTrace&, const DemandTrace&) = default;

 private:
  std::vector<std::int64_t> demands_;
};

// Zero-pads the trace so its horizon is a multiple of tau.
DemandTrace PadToPeriod(const DemandTrace& trace, std::int64_t tau);

// r_t: number of new reservations bought at slot t.
using ReservationPlan = std::vector<std::int64_t>;

struct Allocation {
  std::int64_t reserved = 0;
  std::int64_t edge = 0;
  std::int64_t on_demand = 0;

  std::int64_t total() const { return reserved + edge + on_demand; }
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

using AllocationSchedule = std::vector<Allocation>;

struct AllocationTotals {
  std::int64_t reserved = 0;
  std::int64_t edge = 0;
  std::int64_t on_demand = 0;
};

AllocationTotals Totals(std::span<const Allocation> schedule);

struct CostBreakdown {
  Money reservation_cost;
  Money edge_cost;
  Money on_demand_cost;
  Money reserved_usage_cost;
  Money raw_total;
  // lambda * sum a^w + p * sum a^o + gamma * sum r, which equals
  // raw_total - theta * sum d whenever every request is served.
  Money normalized_objective;

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

// Common output shape of every planner and baseline.
struct PlanResult {
  ReservationPlan plan;
  AllocationSchedule schedule;
  CostBreakdown cost;
};

// n_t = sum of r_i over i in [t - tau + 1, t].
std::vector<std::int64_t> ActiveReservations(std::span<const std::int64_t> plan, std::int64_t tau);

// Reserved first, then edge, then on-demand.
Allocation AllocateSlot(std::int64_t demand, std::int64_t active, std::int64_t edge_capacity);

AllocationSchedule Allocate(const DemandTrace& trace, std::span<const std::int64_t> plan,
                            const PricingConfig& config);

// Prices an explicit schedule over slots [first, last). Reservations bought
// inside the range are charged; reservations bought before it only matter
// through the schedule.
CostBreakdown ScheduleCost(std::span<const std::int64_t> plan, std::span<const Allocation> schedule,
                           const PricingConfig& config, std::int64_t first, std::int64_t last);
CostBreakdown ScheduleCost(std::span<const std::int64_t> plan, std::span<const Allocation> schedule,
                           const PricingConfig& config);

// Allocates every slot by the priority rule and prices the result. Throws
// LengthMismatch when plan and trace lengths differ.
CostBreakdown EvaluateCost(const DemandTrace& trace, std::span<const std::int64_t> plan,
                           const PricingConfig& config);
CostBreakdown EvaluateCost(const DemandTrace& trace, std::span<const std::int64_t> plan,
                           const PricingConfig& config, std::int64_t first, std::int64_t last);

// Per-level view of a trace: level l is "on" at t iff d_t >= l. Utilization
// u^l counts on-slots over the whole horizon, u^l_k over interval k (slots
// [k*tau, (k+1)*tau)).
class LevelView {
 public:
  LevelView(const DemandTrace& trace, std::int64_t tau);

  std::int64_t peak() const { return static_cast<std::int64_t>(utilization_.size()); }
  std::int64_t period() const { return tau_; }
  std::int64_t interval_count() const { return static_cast<std::int64_t>(interval_utilization_.size()); }

  bool Indicator(std::int64_t t, std::int64_t level) const;
  // Zero for levels above the peak.
  std::int64_t Utilization(std::int64_t level) const;
  std::int64_t IntervalUtilization(std::int64_t k, std::int64_t level) const;

  // u^1_k .. u^{peak_k}_k for one interval.
  std::span<const std::int64_t> IntervalUtilizations(std::int64_t k) const;

 private:
  std::vector<std::int64_t> demands_;
  std::int64_t tau_;
  std::vector<std::int64_t> utilization_;
  std::vector<std::vector<std::int64_t>> interval_utilization_;
};

LevelView BuildLevelView(const DemandTrace& trace, std::int64_t tau);

// c_k: normalized cost of interval k (reservations bought in it plus edge and
// on-demand usage of its slots).
Money IntervalCost(const DemandTrace& trace, std::span<const std::int64_t> plan, const PricingConfig& config,
                   std::int64_t k);

// c_{k,l}: the share of c_k attributable to demand level l. Summing over all
// levels 1..max(peak, max r) recovers c_k exactly.
Money PerLevelIntervalCost(const DemandTrace& trace, std::span<const std::int64_t> plan,
                           const PricingConfig& config, std::int64_t k, std::int64_t level);

}  // namespace edgeplan
