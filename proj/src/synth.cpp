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

#include "edgeplan/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "edgeplan/errors.hpp"
#include "edgeplan/random.hpp"

namespace edgeplan {

DemandTrace SynthDemand(const SynthSpec& spec) {
  if (spec.horizon <= 0) throw InvalidParameter("synthetic horizon must be positive");
  if (!(spec.mean > 0)) throw InvalidParameter("synthetic mean must be positive");
  if (!(spec.fluctuation >= 0)) throw InvalidParameter("synthetic fluctuation must be non-negative");
  if (spec.peak_cap < 0) throw InvalidParameter("peak cap must be non-negative");

  const auto n = static_cast<std::size_t>(spec.horizon);
  const double c = spec.fluctuation;
  std::vector<std::int64_t> demands(n);
  auto clamp = [&](double v) {
    auto d = static_cast<std::int64_t>(std::llround(std::max(v, 0.0)));
    return spec.peak_cap > 0 ? std::min(d, spec.peak_cap) : d;
  };
  if (c == 0.0) {
    std::fill(demands.begin(), demands.end(), clamp(spec.mean));
    return DemandTrace(std::move(demands));
  }

  // A two-point distribution taking `high` on a fraction q of slots and `low`
  // elsewhere has std/mean = c when
  //   high = m (1 + c sqrt((1-q)/q)),  low = m (1 - c sqrt(q/(1-q))),
  // and low >= 0 needs q <= 1 / (1 + c^2).
  const double target_q = c < 1.0 ? 0.5 : 1.0 / (1.0 + c * c);
  const auto bursts = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(target_q * static_cast<double>(n))),
                                              1, std::max<std::size_t>(n - 1, 1));
  const double q = static_cast<double>(bursts) / static_cast<double>(n);
  const double high = q < 1.0 ? spec.mean * (1.0 + c * std::sqrt((1.0 - q) / q)) : spec.mean;
  const double low = q < 1.0 ? std::max(0.0, spec.mean * (1.0 - c * std::sqrt(q / (1.0 - q)))) : spec.mean;

  Rng rng(spec.seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.Shuffle(std::span(order));

  const double jitter = std::min(0.1, c);
  for (std::size_t i = 0; i < n; ++i) {
    const double level = i < bursts ? high : low;
    demands[order[i]] = clamp(level * (1.0 + jitter * rng.UniformReal(-1.0, 1.0)));
  }
  return DemandTrace(std::move(demands));
}

std::map<std::string, DemandTrace> SynthUsers(std::uint64_t seed, std::int64_t horizon, int users_per_band) {
  if (users_per_band < 1) throw InvalidParameter("need at least one user per band");
  struct Band {
    const char* prefix;
    double min_ratio;
    double max_ratio;
  };
  // Kept clear of the 1 and 5 boundaries so jitter and rounding never move
  // a user across bands.
  constexpr Band kBands[] = {{"u1", 6.0, 9.0}, {"u2", 1.5, 4.0}, {"u3", 0.1, 0.7}};

  Rng rng(seed);
  std::map<std::string, DemandTrace> users;
  for (const Band& band : kBands) {
    for (int i = 0; i < users_per_band; ++i) {
      SynthSpec spec;
      spec.seed = static_cast<std::uint64_t>(rng.UniformInt(0, std::numeric_limits<std::int64_t>::max()));
      spec.horizon = horizon;
      spec.mean = rng.UniformReal(5.0, 40.0);
      spec.fluctuation = rng.UniformReal(band.min_ratio, band.max_ratio);
      users.emplace(std::string(band.prefix) + "-" + std::to_string(i), SynthDemand(spec));
    }
  }
  return users;
}

}  // namespace edgeplan
