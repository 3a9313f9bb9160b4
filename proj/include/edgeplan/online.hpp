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

// Online planner: irrevocable per-slot reservation decisions without any
// knowledge of future demand.
//
// Time is cut into intervals of tau slots. At slot t of interval k, after
// d_t arrives, level l (1 <= l <= d_t) triggers a reservation when
//
//   gamma <= lambda * S^l + (p - lambda) * S^{l+w}
//
// where S^l counts slots since the start of interval k whose demand reached
// level l, including t. A trigger buys one VM at the first slot t' in
// [t, end of interval k] where fewer than l reservations are active, so each
// level is covered by at most one VM bought per interval. A reservation lasts
// tau slots from its own start and may carry into the next interval; the
// level counts still restart at every interval boundary.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edgeplan/model.hpp"

namespace edgeplan {

// One reservation bought by the online planner.
struct ReservationTrigger {
  std::int64_t slot;      // slot whose demand fired the threshold
  std::int64_t level;     // demand level that fired
  std::int64_t start;     // slot the reservation was bought for
};

class OnlinePlanner {
 public:
  explicit OnlinePlanner(PricingConfig config);

  // Consumes d_t for the next slot, commits reservations, and returns the
  // slot's allocation.
  Allocation Step(std::int64_t demand);

  // Number of slots consumed so far.
  std::int64_t slot() const { return slot_; }
  std::int64_t interval() const { return slot_ / config_.reservation_period(); }

  // Every reservation committed so far, including ones bought for future
  // slots of the current interval. Entries before slot() are final.
  std::span<const std::int64_t> reservations() const { return reservations_; }

  // Active reservations at slot t given the commitments made so far.
  std::int64_t ActiveAt(std::int64_t t) const;

  std::span<const ReservationTrigger> triggers() const { return triggers_; }
  const PricingConfig& config() const { return config_; }

 private:
  void Reserve(std::int64_t start);
  void EnsureSlots(std::int64_t count);

  PricingConfig config_;
  std::int64_t slot_ = 0;
  // level_counts_[l-1]: slots in the current interval with demand >= l.
  std::vector<std::int64_t> level_counts_;
  std::vector<std::int64_t> reservations_;
  std::vector<std::int64_t> active_;
  std::vector<ReservationTrigger> triggers_;
};

struct OnlineResult {
  ReservationPlan plan;
  AllocationSchedule schedule;
  CostBreakdown cost;
  std::vector<ReservationTrigger> triggers;
};

// Feeds the trace, zero-padded to a multiple of tau, through an
// OnlinePlanner one slot at a time.
OnlineResult RunOnline(const DemandTrace& trace, const PricingConfig& config);

}  // namespace edgeplan
