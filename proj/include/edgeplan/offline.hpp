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

// Offline planner with full knowledge of the demand trace.
//
// The horizon is cut into intervals of tau slots and reservations are only
// bought at the first slot of each interval, so each reservation covers its
// interval exactly. Within an interval, the l-th reservation is worth buying
// iff its upfront price does not exceed what it saves:
//
//   gamma <= lambda * u^l_k + (p - lambda) * u^{l+w}_k
//
// (level l moves from the edge to the reservation, and level l+w moves from
// on-demand to the edge). The right-hand side is non-increasing in l, so the
// first failing level ends the scan. The result is optimal among plans that
// only reserve at interval starts and within twice the unrestricted optimum.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edgeplan/model.hpp"

namespace edgeplan {

struct OfflineResult {
  ReservationPlan plan;
  // l_r(k): reservations bought at the start of interval k.
  std::vector<std::int64_t> reserved_per_interval;
  AllocationSchedule schedule;
  CostBreakdown cost;
};

// `interval_utilization[l-1]` is u^l_k. Levels are scanned upward from 1 and
// the scan stops at the first level whose criterion fails; equality reserves.
// Never returns more than the number of levels with positive utilization.
std::int64_t ReserveCountForInterval(std::span<const std::int64_t> interval_utilization,
                                     const PricingConfig& config);

// Traces whose horizon is not a multiple of tau are zero-padded first; the
// result covers the padded horizon.
OfflineResult PlanOffline(const DemandTrace& trace, const PricingConfig& config);

}  // namespace edgeplan
