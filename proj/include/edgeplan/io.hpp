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

// File formats.
//
//   demand trace   CSV, header `slot,demand`, one row per slot. Slots are
//                  0-based; missing slots have zero demand. Fractional
//                  demand is rounded up.
//   pricing config key=value lines: p_prime, theta, gamma, lambda_prime (all
//                  integer micro-dollars), tau, w. `#` starts a comment.
//
// Every writer emits fixed-precision numbers so output is byte-stable.

#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "edgeplan/experiment.hpp"
#include "edgeplan/model.hpp"

namespace edgeplan {

DemandTrace ReadTraceCsv(std::istream& in);
void WriteTraceCsv(std::ostream& out, const DemandTrace& trace);

// Throws MalformedInput for syntax errors, unknown or missing keys.
PricingTerms ReadPricingTerms(std::istream& in);
void WritePricingConfig(std::ostream& out, const PricingConfig& config);

// Six decimals, or "N/A" when empty.
std::string FormatSaving(std::optional<double> saving);
std::string FormatFixed(double value, int decimals = 6);

// slot,demand,reserve,active,reserved,edge,on_demand
void WritePlanCsv(std::ostream& out, const DemandTrace& trace, const PlanResult& result, const PricingConfig& config);

// One header plus one row per cost breakdown.
void WriteCostHeader(std::ostream& out);
void WriteCostFields(std::ostream& out, const CostBreakdown& cost);

void WriteComparisonCsv(std::ostream& out, std::span<const ComparisonRow> rows);
void WriteSweepCsv(std::ostream& out, std::span<const SweepRow> rows);
void WriteRatioReportCsv(std::ostream& out, const RatioReport& report);

}  // namespace edgeplan
