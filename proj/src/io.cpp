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

#include "edgeplan/io.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "csv.hpp"
#include "edgeplan/errors.hpp"

namespace edgeplan {

DemandTrace ReadTraceCsv(std::istream& in) {
  internal::CsvReader reader(in);
  reader.ExpectHeader({"slot", "demand"});
  std::map<std::int64_t, std::int64_t> by_slot;
  std::vector<std::string> fields;
  while (reader.Next(fields)) {
    const std::string where = "line " + std::to_string(reader.line()) + ": ";
    std::int64_t slot = 0;
    if (fields.size() != 2 || !internal::ParseInt(fields[0], slot) || slot < 0) {
      throw MalformedInput(where + "expected 'slot,demand' with a non-negative integer slot");
    }
    std::int64_t demand = 0;
    if (!internal::ParseInt(fields[1], demand)) {
      double fractional = 0;
      if (!internal::ParseDouble(fields[1], fractional) || !std::isfinite(fractional)) {
        throw MalformedInput(where + "demand '" + fields[1] + "' is not a number");
      }
      demand = static_cast<std::int64_t>(std::ceil(fractional));
    }
    if (demand < 0) throw MalformedInput(where + "negative demand");
    if (!by_slot.emplace(slot, demand).second) throw MalformedInput(where + "duplicate slot " + fields[0]);
  }
  if (by_slot.empty()) throw EmptyInput("trace has no rows");
  std::vector<std::int64_t> demands(static_cast<std::size_t>(by_slot.rbegin()->first) + 1, 0);
  for (const auto& [slot, demand] : by_slot) demands[static_cast<std::size_t>(slot)] = demand;
  return DemandTrace(std::move(demands));
}

void WriteTraceCsv(std::ostream& out, const DemandTrace& trace) {
  out << "slot,demand\n";
  for (std::int64_t t = 0; t < trace.horizon(); ++t) out << t << ',' << trace[t] << '\n';
}

PricingTerms ReadPricingTerms(std::istream& in) {
  std::map<std::string, std::int64_t> values;
  std::string line;
  std::int64_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view text = line;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = internal::Trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    const std::string where = "config line " + std::to_string(number) + ": ";
    if (eq == std::string_view::npos) throw MalformedInput(where + "expected key=value");
    const std::string key(internal::Trim(text.substr(0, eq)));
    std::int64_t value = 0;
    if (!internal::ParseInt(text.substr(eq + 1), value)) throw MalformedInput(where + "value must be an integer");
    if (!values.emplace(key, value).second) throw MalformedInput(where + "duplicate key '" + key + "'");
  }

  auto take = [&](const char* key) {
    const auto it = values.find(key);
    if (it == values.end()) throw MalformedInput(std::string("config is missing '") + key + "'");
    const std::int64_t v = it->second;
    values.erase(it);
    return v;
  };
  PricingTerms terms;
  terms.on_demand_price = Micros(take("p_prime"));
  terms.reserved_usage_price = Micros(take("theta"));
  terms.upfront_price = Micros(take("gamma"));
  terms.edge_unit_cost = Micros(take("lambda_prime"));
  terms.reservation_period = take("tau");
  terms.edge_capacity = take("w");
  if (!values.empty()) throw MalformedInput("unknown config key '" + values.begin()->first + "'");
  return terms;
}

void WritePricingConfig(std::ostream& out, const PricingConfig& config) {
  out << "p_prime=" << config.on_demand_price().micros() << '\n'
      << "theta=" << config.reserved_usage_price().micros() << '\n'
      << "gamma=" << config.upfront_price().micros() << '\n'
      << "lambda_prime=" << config.edge_unit_cost().micros() << '\n'
      << "tau=" << config.reservation_period() << '\n'
      << "w=" << config.edge_capacity() << '\n';
}

std::string FormatFixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  // Avoid "-0.000000".
  std::string s(buffer);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::string FormatSaving(std::optional<double> saving) { return saving ? FormatFixed(*saving) : "N/A"; }

void WritePlanCsv(std::ostream& out, const DemandTrace& trace, const PlanResult& result,
                  const PricingConfig& config) {
  const DemandTrace padded = PadToPeriod(trace, config.reservation_period());
  const auto active = ActiveReservations(result.plan, config.reservation_period());
  out << "slot,demand,reserve,active,reserved,edge,on_demand\n";
  for (std::size_t t = 0; t < result.plan.size(); ++t) {
    const Allocation& a = result.schedule[t];
    out << t << ',' << padded.demands()[t] << ',' << result.plan[t] << ',' << active[t] << ',' << a.reserved << ','
        << a.edge << ',' << a.on_demand << '\n';
  }
}

void WriteCostHeader(std::ostream& out) {
  out << "reservation_cost,edge_cost,on_demand_cost,reserved_usage_cost,raw_total,normalized_objective";
}

void WriteCostFields(std::ostream& out, const CostBreakdown& cost) {
  out << cost.reservation_cost.ToDollarString() << ',' << cost.edge_cost.ToDollarString() << ','
      << cost.on_demand_cost.ToDollarString() << ',' << cost.reserved_usage_cost.ToDollarString() << ','
      << cost.raw_total.ToDollarString() << ',' << cost.normalized_objective.ToDollarString();
}

void WriteComparisonCsv(std::ostream& out, std::span<const ComparisonRow> rows) {
  out << "algorithm,";
  WriteCostHeader(out);
  out << ",saving,reserved_requests,edge_requests,on_demand_requests,reservations\n";
  for (const ComparisonRow& row : rows) {
    std::int64_t reservations = 0;
    for (std::int64_t r : row.plan) reservations += r;
    out << AlgorithmName(row.algorithm) << ',';
    WriteCostFields(out, row.cost);
    out << ',' << FormatSaving(row.saving) << ',' << row.totals.reserved << ',' << row.totals.edge << ','
        << row.totals.on_demand << ',' << reservations << '\n';
  }
}

void WriteSweepCsv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "group,vary,value,algorithm,w,tau,gamma,";
  WriteCostHeader(out);
  out << ",saving,reserved_requests,edge_requests,on_demand_requests\n";
  for (const SweepRow& row : rows) {
    out << row.group << ',' << row.vary << ',' << FormatFixed(row.value, 3) << ',' << AlgorithmName(row.algorithm)
        << ',' << row.edge_capacity << ',' << row.period << ',' << row.upfront.ToDollarString() << ',';
    WriteCostFields(out, row.cost);
    out << ',' << FormatSaving(row.saving) << ',' << row.totals.reserved << ',' << row.totals.edge << ','
        << row.totals.on_demand << '\n';
  }
}

void WriteRatioReportCsv(std::ostream& out, const RatioReport& report) {
  out << "check,instances,worst_ratio,bound\n";
  out << "offline," << report.instances << ',' << FormatFixed(report.worst_offline) << ",2.000000\n";
  out << "online," << report.instances << ',' << FormatFixed(report.worst_online) << ','
      << FormatFixed(report.online_bound_at_worst) << '\n';
  out << "online_no_edge," << report.instances << ',' << FormatFixed(report.worst_online_no_edge) << ",4.000000\n";
}

}  // namespace edgeplan
