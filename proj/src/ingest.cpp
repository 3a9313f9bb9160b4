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

#include "edgeplan/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "csv.hpp"
#include "edgeplan/errors.hpp"

namespace edgeplan {

namespace {

// Guards against absurd timestamps allocating huge curves.
constexpr std::int64_t kMaxSlots = 10'000'000;

}  // namespace

void IngestConfig::Validate() const {
  if (slot_seconds <= 0) throw InvalidParameter("slot length must be positive");
  if (!(low_fluctuation > 0) || !(high_fluctuation > 0)) {
    throw InvalidParameter("fluctuation thresholds must be positive");
  }
  if (low_fluctuation > high_fluctuation) {
    throw InvalidParameter("low fluctuation threshold exceeds the high one");
  }
}

IngestResult IngestEvents(std::span<const TaskEvent> events, const IngestConfig& config) {
  config.Validate();
  const std::int64_t slot_us = config.slot_seconds * 1'000'000;

  IngestResult result;
  std::map<std::string, std::vector<std::int64_t>> counts;
  std::int64_t horizon = 0;
  for (const TaskEvent& event : events) {
    if (event.user_id.empty() || event.timestamp_us < config.epoch_us) {
      ++result.malformed;
      continue;
    }
    const std::int64_t slot = (event.timestamp_us - config.epoch_us) / slot_us;
    if (slot >= kMaxSlots) {
      ++result.malformed;
      continue;
    }
    const std::string& user = config.mode == AggregationMode::kAggregate ? kAggregateUser : event.user_id;
    auto& curve = counts[user];
    if (static_cast<std::int64_t>(curve.size()) <= slot) curve.resize(static_cast<std::size_t>(slot) + 1, 0);
    ++curve[static_cast<std::size_t>(slot)];
    horizon = std::max(horizon, slot + 1);
  }
  if (counts.empty()) throw EmptyInput("no valid task events");

  for (auto& [user, curve] : counts) {
    curve.resize(static_cast<std::size_t>(horizon), 0);
    result.users.emplace(user, DemandTrace(std::move(curve)));
  }
  return result;
}

IngestResult IngestTrace(std::istream& csv, const IngestConfig& config) {
  internal::CsvReader reader(csv);
  reader.ExpectHeader({"timestamp_us", "user_id", "task_id"});

  std::vector<TaskEvent> events;
  std::int64_t malformed = 0;
  std::vector<std::string> fields;
  while (reader.Next(fields)) {
    TaskEvent event;
    if (fields.size() != 3 || !internal::ParseInt(fields[0], event.timestamp_us) || fields[1].empty()) {
      ++malformed;
      continue;
    }
    event.user_id = std::move(fields[1]);
    event.task_id = std::move(fields[2]);
    events.push_back(std::move(event));
  }
  if (events.empty()) throw EmptyInput("no task events in input");
  IngestResult result = IngestEvents(events, config);
  result.malformed += malformed;
  return result;
}

std::optional<double> FluctuationRatio(const DemandTrace& trace) {
  const auto n = static_cast<double>(trace.horizon());
  const double mean = static_cast<double>(trace.total()) / n;
  if (mean == 0.0) return std::nullopt;
  double squares = 0.0;
  for (std::int64_t d : trace.demands()) {
    const double diff = static_cast<double>(d) - mean;
    squares += diff * diff;
  }
  return std::sqrt(squares / n) / mean;
}

FluctuationGroups GroupByFluctuation(const std::map<std::string, DemandTrace>& users, const IngestConfig& config) {
  config.Validate();
  FluctuationGroups groups;
  for (const auto& [user, trace] : users) {
    const std::optional<double> ratio = FluctuationRatio(trace);
    if (!ratio) {
      groups.zero_mean.push_back(user);
    } else if (*ratio > config.high_fluctuation) {
      groups.high.push_back(user);
    } else if (*ratio >= config.low_fluctuation) {
      groups.medium.push_back(user);
    } else {
      groups.low.push_back(user);
    }
  }
  return groups;
}

DemandTrace AggregateDemand(const std::map<std::string, DemandTrace>& users, std::span<const std::string> names) {
  if (names.empty()) throw EmptyInput("no users to aggregate");
  std::vector<std::int64_t> total;
  for (const std::string& name : names) {
    const auto it = users.find(name);
    if (it == users.end()) throw InvalidParameter("unknown user '" + name + "'");
    const auto demands = it->second.demands();
    if (total.size() < demands.size()) total.resize(demands.size(), 0);
    for (std::size_t t = 0; t < demands.size(); ++t) total[t] += demands[t];
  }
  return DemandTrace(std::move(total));
}

}  // namespace edgeplan
