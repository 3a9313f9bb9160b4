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

// Turning task-arrival logs into per-user demand curves, and splitting users
// by how bursty their demand is.
//
// Each task is one VM request lasting one slot, so a user's demand in a slot
// is the number of their tasks that arrived in it. The event schema is a
// flattened cluster task-event table:
//
//   timestamp_us,user_id,task_id
//
// (for the 2011 Google cluster trace: task_events column 1 `time`, column 7
// `user`, and `job_id:task_index` as task_id, keeping SUBMIT events only).

#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgeplan/model.hpp"

namespace edgeplan {

enum class AggregationMode { kPerUser, kAggregate };

struct IngestConfig {
  std::int64_t slot_seconds = 3600;
  // Timestamps are microseconds since this instant; earlier ones are malformed.
  std::int64_t epoch_us = 0;
  double high_fluctuation = 5.0;
  double low_fluctuation = 1.0;
  AggregationMode mode = AggregationMode::kPerUser;

  // Throws InvalidParameter.
  void Validate() const;
};

struct TaskEvent {
  std::int64_t timestamp_us = 0;
  std::string user_id;
  std::string task_id;
};

// Key used for the single trace produced in kAggregate mode.
inline constexpr const char* kAggregateUser = "*";

struct IngestResult {
  // Every trace spans the same horizon: slot 0 through the last busy slot.
  std::map<std::string, DemandTrace> users;
  std::int64_t malformed = 0;
};

// Throws EmptyInput when no valid event remains.
IngestResult IngestEvents(std::span<const TaskEvent> events, const IngestConfig& config);

// Reads the CSV schema above (header required). Rows that do not parse are
// skipped and counted in `malformed`.
IngestResult IngestTrace(std::istream& csv, const IngestConfig& config);

// Population standard deviation over mean; nullopt for an all-zero trace.
std::optional<double> FluctuationRatio(const DemandTrace& trace);

struct FluctuationGroups {
  std::vector<std::string> high;    // ratio > high threshold
  std::vector<std::string> medium;  // low <= ratio <= high
  std::vector<std::string> low;     // ratio < low threshold
  std::vector<std::string> zero_mean;
};

FluctuationGroups GroupByFluctuation(const std::map<std::string, DemandTrace>& users, const IngestConfig& config);

// Slot-wise sum of the named users' traces. Throws EmptyInput for no names.
DemandTrace AggregateDemand(const std::map<std::string, DemandTrace>& users, std::span<const std::string> names);

}  // namespace edgeplan
