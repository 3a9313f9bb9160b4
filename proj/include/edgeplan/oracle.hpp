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

// Exact solvers for small instances, used as ground truth when checking the
// planners' approximation and competitive ratios.

#pragma once

#include <cstdint>

#include "edgeplan/model.hpp"

namespace edgeplan {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct OracleResult {
  Money objective;  // normalized objective of `plan`
  ReservationPlan plan;
  std::uint64_t nodes = 0;  // search nodes expanded
};

// Minimum normalized objective over every plan with 0 <= r_t <= peak, by
// depth-first branch and bound. Works on the trace as given (no padding).
// Throws BudgetExceeded when (peak + 1)^T > budget.
OracleResult OptimalExhaustive(const DemandTrace& trace, const PricingConfig& config,
                               std::uint64_t budget = kDefaultOracleBudget);

// Minimum over plans that only reserve at interval starts. Intervals are
// independent there, so each one is solved by trying every count from 0 to
// the interval peak. Pads the trace to a multiple of tau.
OracleResult OptimalIntervalAligned(const DemandTrace& trace, const PricingConfig& config);

}  // namespace edgeplan
