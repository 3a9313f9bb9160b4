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

// Comparison strategies. Like the planners, each pads the trace to a
// multiple of tau and returns a result covering the padded horizon.

#pragma once

#include "edgeplan/model.hpp"

namespace edgeplan {

// Everything on remote on-demand VMs.
PlanResult PureOnDemand(const DemandTrace& trace, const PricingConfig& config);

// Edge first, overflow to on-demand, never reserves.
PlanResult EdgePlusOnDemand(const DemandTrace& trace, const PricingConfig& config);

// Edge-unaware online broker: reserves at level l at slot t when
//   gamma <= p * #{i in [t - tau + 1, t] : d_i >= l},
// buying one VM at the first slot of [t, t + tau - 1] with fewer than l
// active reservations. The edge is never used. This is a reconstruction of
// the published broker strategy from its description, not its pseudocode.
PlanResult WangOnline(const DemandTrace& trace, const PricingConfig& config);

// Edge first; the residual (d_t - w)^+ is planned by WangOnline.
PlanResult EdgePlusWang(const DemandTrace& trace, const PricingConfig& config);

}  // namespace edgeplan
