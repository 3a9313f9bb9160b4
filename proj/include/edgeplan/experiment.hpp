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

// Experiment drivers: head-to-head comparisons, parameter sweeps over edge
// capacity and reservation period, and randomized ratio verification
// against the exact oracle.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgeplan/model.hpp"
#include "edgeplan/oracle.hpp"
#include "edgeplan/random.hpp"

namespace edgeplan {

enum class Algorithm { kOffline, kOnline, kEdgeOnDemand, kWang, kEdgeWang, kOnDemand, kOracle };

// CLI spelling: offline, online, e-od, wang, e-wang, ondemand, oracle.
std::string_view AlgorithmName(Algorithm algorithm);
// Throws ValidationError for unknown names.
Algorithm ParseAlgorithm(std::string_view name);

// Every algorithm except the exponential oracle.
std::span<const Algorithm> StandardAlgorithms();

// Runs one strategy over the trace padded to a multiple of tau.
PlanResult RunAlgorithm(Algorithm algorithm, const DemandTrace& trace, const PricingConfig& config,
                        std::uint64_t oracle_budget = kDefaultOracleBudget);

struct ComparisonRow {
  Algorithm algorithm;
  // Costs and totals cover the original horizon only; padding is excluded.
  CostBreakdown cost;
  AllocationTotals totals;
  // 1 - raw cost / raw cost of pure on-demand; empty when that is zero.
  std::optional<double> saving;
  ReservationPlan plan;  // over the padded horizon
};

std::vector<ComparisonRow> RunComparison(const DemandTrace& trace, const PricingConfig& config,
                                         std::span<const Algorithm> algorithms,
                                         std::uint64_t oracle_budget = kDefaultOracleBudget);

struct NamedTrace {
  std::string group;
  DemandTrace trace;
};

struct SweepSpec {
  // Edge capacity as a multiple of the demand's standard deviation.
  std::vector<double> phis{0.5, 1.0, 2.0, 3.0, 4.0};
  // Reservation periods; the upfront price scales proportionally from the
  // base config's (tau, gamma).
  std::vector<std::int64_t> periods{168, 336, 672};
  // Capacity used while varying the period.
  double default_phi = 1.0;
  bool vary_phi = true;
  bool vary_period = true;
  std::vector<Algorithm> algorithms{StandardAlgorithms().begin(), StandardAlgorithms().end()};

  void Validate() const;
};

struct SweepRow {
  std::string group;
  std::string vary;  // "phi" or "tau"
  double value = 0;
  Algorithm algorithm = Algorithm::kOffline;
  std::int64_t edge_capacity = 0;
  std::int64_t period = 0;
  Money upfront;
  CostBreakdown cost;
  AllocationTotals totals;
  std::optional<double> saving;
};

// Population standard deviation of the per-slot demand.
double DemandStdDev(const DemandTrace& trace);

// w = round(phi * sigma); gamma(tau) = gamma_base * tau / tau_base.
std::int64_t CapacityForPhi(const DemandTrace& trace, double phi);
Money ScaledUpfront(const PricingConfig& base, std::int64_t period);

// Rows sorted by (group, vary, value, algorithm).
std::vector<SweepRow> Sweep(std::span<const NamedTrace> traces, const PricingConfig& base, const SweepSpec& spec);

// Aggregate demand of each fluctuation group of a synthetic population:
// "group1" (high), "group2" (medium), "group3" (low).
std::vector<NamedTrace> SyntheticGroups(std::uint64_t seed, std::int64_t horizon = 672, int users_per_group = 8);

struct RatioCheckSpec {
  std::uint64_t seed = 42;
  std::int64_t count = 500;
  std::int64_t max_horizon = 8;
  std::int64_t max_peak = 3;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
};

struct RandomInstance {
  DemandTrace trace;
  PricingConfig config;
};

// Small instance in the valid price regime. The horizon is a multiple of a
// period drawn from 1..4, capped by max_horizon.
RandomInstance RandomSmallInstance(Rng& rng, std::int64_t max_horizon, std::int64_t max_peak);

// JSON object with the trace and every price, for reproducing a failure.
std::string InstanceJson(const DemandTrace& trace, const PricingConfig& config);

struct RatioReport {
  std::int64_t instances = 0;
  double worst_offline = 1.0;           // bound 2
  double worst_online = 1.0;
  double online_bound_at_worst = 6.0;   // max{6, 2p/lambda} of that instance
  double worst_online_no_edge = 1.0;    // bound 4
};

// Checks, on `count` random instances: offline <= 2 opt, online <=
// max{6, 2p/lambda} opt, online <= 4 opt when w = 0, and offline equal to
// the interval-aligned optimum. Throws RatioViolation on the first failure.
RatioReport VerifyRatios(const RatioCheckSpec& spec);

}  // namespace edgeplan
