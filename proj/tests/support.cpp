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

#include "support.hpp"

#include <algorithm>
#include <sstream>

namespace edgeplan::testing {

ReferenceTotals ReferenceCost(std::span<const std::int64_t> demand, std::span<const std::int64_t> plan,
                              const PricingConfig& config) {
  const std::int64_t tau = config.reservation_period();
  const std::int64_t w = config.edge_capacity();
  const std::int64_t p_prime = config.on_demand_price().micros();
  const std::int64_t theta = config.reserved_usage_price().micros();
  const std::int64_t gamma = config.upfront_price().micros();
  const std::int64_t lambda_prime = config.edge_unit_cost().micros();
  const std::int64_t p = p_prime - theta;
  const std::int64_t lambda = lambda_prime - theta;

  ReferenceTotals totals;
  const auto horizon = static_cast<std::int64_t>(demand.size());
  for (std::int64_t t = 0; t < horizon; ++t) {
    std::int64_t n = 0;
    for (std::int64_t i = std::max<std::int64_t>(0, t - tau + 1); i <= t; ++i) n += plan[i];
    const std::int64_t d = demand[t];
    const std::int64_t reserved = std::min(n, d);
    const std::int64_t edge = std::min(std::max<std::int64_t>(d - n, 0), w);
    const std::int64_t on_demand = d - reserved - edge;
    totals.raw += gamma * plan[t] + theta * reserved + lambda_prime * edge + p_prime * on_demand;
    totals.normalized += gamma * plan[t] + lambda * edge + p * on_demand;
  }
  return totals;
}

ReferenceTotals ReferenceCost(const DemandTrace& trace, std::span<const std::int64_t> plan,
                              const PricingConfig& config) {
  return ReferenceCost(trace.demands(), plan, config);
}

std::int64_t BruteForceOptimum(const DemandTrace& trace, const PricingConfig& config, std::int64_t max_reserve,
                               ReservationPlan* best_plan) {
  const auto horizon = static_cast<std::size_t>(trace.horizon());
  ReservationPlan plan(horizon, 0);
  std::int64_t best = ReferenceCost(trace, plan, config).normalized;
  if (best_plan) *best_plan = plan;
  // Odometer over (max_reserve + 1)^T plans.
  while (true) {
    std::size_t i = 0;
    while (i < horizon && plan[i] == max_reserve) plan[i++] = 0;
    if (i == horizon) break;
    ++plan[i];
    const std::int64_t cost = ReferenceCost(trace, plan, config).normalized;
    if (cost < best) {
      best = cost;
      if (best_plan) *best_plan = plan;
    }
  }
  return best;
}

std::int64_t BruteForceAlignedOptimum(const DemandTrace& trace, const PricingConfig& config) {
  const std::int64_t tau = config.reservation_period();
  const std::int64_t intervals = (trace.horizon() + tau - 1) / tau;
  const std::int64_t peak = trace.peak();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(intervals), 0);
  ReservationPlan plan(static_cast<std::size_t>(trace.horizon()), 0);
  std::int64_t best = ReferenceCost(trace, plan, config).normalized;
  while (true) {
    std::size_t i = 0;
    while (i < counts.size() && counts[i] == peak) counts[i++] = 0;
    if (i == counts.size()) break;
    ++counts[i];
    for (std::size_t k = 0; k < counts.size(); ++k) plan[k * static_cast<std::size_t>(tau)] = counts[k];
    best = std::min(best, ReferenceCost(trace, plan, config).normalized);
  }
  return best;
}

std::string ScheduleViolation(std::span<const std::int64_t> demand, std::span<const std::int64_t> plan,
                              std::span<const Allocation> schedule, std::int64_t tau, std::int64_t capacity) {
  if (schedule.size() != demand.size() || plan.size() != demand.size()) return "length mismatch";
  for (std::size_t t = 0; t < demand.size(); ++t) {
    std::int64_t n = 0;
    for (std::size_t i = t + 1 > static_cast<std::size_t>(tau) ? t + 1 - static_cast<std::size_t>(tau) : 0; i <= t; ++i) {
      n += plan[i];
    }
    const Allocation& a = schedule[t];
    const std::int64_t d = demand[t];
    std::ostringstream where;
    where << "slot " << t << " (d=" << d << ", n=" << n << ", w=" << capacity << ", a=" << a.reserved << '/'
          << a.edge << '/' << a.on_demand << "): ";
    if (a.reserved < 0 || a.edge < 0 || a.on_demand < 0) return where.str() + "negative share";
    if (a.reserved + a.edge + a.on_demand != d) return where.str() + "shares do not sum to demand";
    if (a.reserved > n) return where.str() + "more reserved than active";
    if (a.edge > capacity) return where.str() + "edge over capacity";
    if (a.edge > 0 && a.reserved != std::min(n, d)) return where.str() + "edge used before reserved";
    if (a.on_demand > 0 && (a.edge != capacity || a.reserved != n)) return where.str() + "on-demand used early";
  }
  return {};
}

PricingConfig RandomPricing(Rng& rng, std::int64_t tau, std::int64_t max_capacity) {
  PricingTerms terms;
  const std::int64_t theta = rng.UniformInt(0, 3);
  const std::int64_t lambda = rng.UniformInt(1, 8);
  const std::int64_t p = lambda + rng.UniformInt(1, 16);
  terms.reserved_usage_price = Micros(theta);
  terms.edge_unit_cost = Micros(theta + lambda);
  terms.on_demand_price = Micros(theta + p);
  terms.upfront_price = Micros(rng.UniformInt(0, 2 * p * tau));
  terms.reservation_period = tau;
  terms.edge_capacity = rng.UniformInt(0, max_capacity);
  return PricingConfig::Create(terms);
}

std::vector<std::int64_t> RandomDemand(Rng& rng, std::int64_t horizon, std::int64_t max_demand) {
  std::vector<std::int64_t> demand(static_cast<std::size_t>(horizon));
  for (auto& d : demand) d = rng.UniformInt(0, max_demand);
  return demand;
}

}  // namespace edgeplan::testing
