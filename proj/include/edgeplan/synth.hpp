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

// Seeded synthetic workloads standing in for cluster traces.

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "edgeplan/model.hpp"

namespace edgeplan {

struct SynthSpec {
  std::uint64_t seed = 1;
  std::int64_t horizon = 672;
  double mean = 20.0;
  // Target standard deviation over mean.
  double fluctuation = 1.0;
  // Upper clamp on any slot's demand; 0 disables it. Clamping lowers the
  // achieved fluctuation.
  std::int64_t peak_cap = 0;
};

// Two-level bursty demand: a fixed number of burst slots at random
// positions, the rest at a base level, with the two levels solved so the
// mean and std/mean ratio hit the targets, plus a little multiplicative
// jitter. Fluctuation 0 yields a constant trace. Same spec, same trace.
DemandTrace SynthDemand(const SynthSpec& spec);

// A population of users in the three fluctuation bands (ratio > 5,
// 1..5, < 1), `users_per_band` each, named "u<band>-<index>".
std::map<std::string, DemandTrace> SynthUsers(std::uint64_t seed, std::int64_t horizon, int users_per_band);

}  // namespace edgeplan
