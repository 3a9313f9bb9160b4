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

#include "edgeplan/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "edgeplan/errors.hpp"
#include "edgeplan/offline.hpp"

namespace edgeplan {

namespace {

// Depth-first search over r_0..r_{T-1}. Choosing r_t fixes n_t, so the cost
// of slots 0..t is exact once r_t is chosen; the remaining slots are bounded
// below by zero.
//
// r_t is capped at the peak demand D: lowering any r_t > D to D keeps
// n_s >= D >= d_s on every slot it covers, so usage cost is unchanged and the
// upfront cost does not grow.
class BranchAndBound {
 public:
  BranchAndBound(const DemandTrace& trace, const PricingConfig& config)
      : trace_(trace),
        config_(config),
        tau_(config.reservation_period()),
        plan_(static_cast<std::size_t>(trace.horizon()), 0) {}

  void Seed(const ReservationPlan& plan) {
    const Money cost = EvaluateCost(trace_, plan, config_).normalized_objective;
    if (best_plan_.empty() || cost < best_) {
      best_ = cost;
      best_plan_ = plan;
    }
  }

  OracleResult Run() {
    Search(0, Money());
    return {.objective = best_, .plan = best_plan_, .nodes = nodes_};
  }

 private:
  void Search(std::int64_t t, Money partial) {
    ++nodes_;
    if (t == trace_.horizon()) {
      if (partial < best_) {
        best_ = partial;
        best_plan_ = plan_;
      }
      return;
    }
    // Reservations bought in the previous tau - 1 slots are still active.
    std::int64_t carried = 0;
    for (std::int64_t i = std::max<std::int64_t>(0, t - tau_ + 1); i < t; ++i) carried += plan_[static_cast<std::size_t>(i)];

    const auto slot = static_cast<std::size_t>(t);
    for (std::int64_t r = trace_.peak(); r >= 0; --r) {
      const Allocation a = AllocateSlot(trace_[t], carried + r, config_.edge_capacity());
      const Money cost = partial + config_.upfront_price() * r + config_.normalized_edge() * a.edge +
                         config_.normalized_on_demand() * a.on_demand;
      if (cost >= best_) continue;
      plan_[slot] = r;
      Search(t + 1, cost);
    }
    plan_[slot] = 0;
  }

  const DemandTrace& trace_;
  const PricingConfig& config_;
  std::int64_t tau_;
  ReservationPlan plan_;
  Money best_;
  ReservationPlan best_plan_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult OptimalExhaustive(const DemandTrace& trace, const PricingConfig& config, std::uint64_t budget) {
  const auto branching = static_cast<std::uint64_t>(trace.peak()) + 1;
  std::uint64_t plans = 1;
  for (std::int64_t t = 0; t < trace.horizon(); ++t) {
    if (plans > budget / branching) {
      throw BudgetExceeded("exhaustive search over " + std::to_string(branching) + "^" +
                           std::to_string(trace.horizon()) + " plans exceeds the budget of " +
                           std::to_string(budget));
    }
    plans *= branching;
  }

  BranchAndBound search(trace, config);
  search.Seed(ReservationPlan(static_cast<std::size_t>(trace.horizon()), 0));
  // The offline planner is within a factor two of optimal, which makes it a
  // strong starting incumbent.
  ReservationPlan offline = PlanOffline(trace, config).plan;
  offline.resize(static_cast<std::size_t>(trace.horizon()));
  search.Seed(offline);
  return search.Run();
}

OracleResult OptimalIntervalAligned(const DemandTrace& trace, const PricingConfig& config) {
  const std::int64_t tau = config.reservation_period();
  const DemandTrace padded = PadToPeriod(trace, tau);
  OracleResult result;
  result.plan.assign(static_cast<std::size_t>(padded.horizon()), 0);

  for (std::int64_t k = 0; k * tau < padded.horizon(); ++k) {
    const auto first = padded.demands().begin() + k * tau;
    const std::int64_t interval_peak = *std::max_element(first, first + tau);
    const auto start = static_cast<std::size_t>(k * tau);

    Money best = Money::FromMicros(std::numeric_limits<std::int64_t>::max());
    std::int64_t best_count = 0;
    for (std::int64_t count = 0; count <= interval_peak; ++count) {
      // An interval-start reservation covers exactly this interval.
      Money cost = config.upfront_price() * count;
      for (auto it = first; it != first + tau; ++it) {
        const Allocation a = AllocateSlot(*it, count, config.edge_capacity());
        cost += config.normalized_edge() * a.edge + config.normalized_on_demand() * a.on_demand;
      }
      ++result.nodes;
      if (cost < best) {
        best = cost;
        best_count = count;
      }
    }
    result.plan[start] = best_count;
    result.objective += best;
  }
  return result;
}

}  // namespace edgeplan
