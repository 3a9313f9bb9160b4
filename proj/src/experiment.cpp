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

#include "edgeplan/experiment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <tuple>

#include <json.hpp>

#include "edgeplan/baselines.hpp"
#include "edgeplan/errors.hpp"
#include "edgeplan/ingest.hpp"
#include "edgeplan/offline.hpp"
#include "edgeplan/online.hpp"
#include "edgeplan/synth.hpp"

namespace edgeplan {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 7> kAlgorithmNames{{
    {Algorithm::kOffline, "offline"},
    {Algorithm::kOnline, "online"},
    {Algorithm::kEdgeOnDemand, "e-od"},
    {Algorithm::kWang, "wang"},
    {Algorithm::kEdgeWang, "e-wang"},
    {Algorithm::kOnDemand, "ondemand"},
    {Algorithm::kOracle, "oracle"},
}};

constexpr std::array<Algorithm, 6> kStandard{Algorithm::kOffline, Algorithm::kOnline, Algorithm::kEdgeOnDemand,
                                             Algorithm::kWang,    Algorithm::kEdgeWang, Algorithm::kOnDemand};

double Ratio(Money cost, Money optimum) {
  if (optimum == Money()) return cost == Money() ? 1.0 : std::numeric_limits<double>::infinity();
  return static_cast<double>(cost.micros()) / static_cast<double>(optimum.micros());
}

AllocationTotals RangeTotals(const AllocationSchedule& schedule, std::int64_t last) {
  return Totals(std::span(schedule).first(static_cast<std::size_t>(last)));
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  for (const auto& [value, name] : kAlgorithmNames) {
    if (value == algorithm) return name;
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (const auto& [value, known] : kAlgorithmNames) {
    if (known == name) return value;
  }
  throw ValidationError("unknown algorithm '" + std::string(name) +
                        "' (expected offline, online, e-od, wang, e-wang, ondemand or oracle)");
}

std::span<const Algorithm> StandardAlgorithms() { return kStandard; }

PlanResult RunAlgorithm(Algorithm algorithm, const DemandTrace& trace, const PricingConfig& config,
                        std::uint64_t oracle_budget) {
  switch (algorithm) {
    case Algorithm::kOffline: {
      OfflineResult r = PlanOffline(trace, config);
      return {std::move(r.plan), std::move(r.schedule), r.cost};
    }
    case Algorithm::kOnline: {
      OnlineResult r = RunOnline(trace, config);
      return {std::move(r.plan), std::move(r.schedule), r.cost};
    }
    case Algorithm::kEdgeOnDemand:
      return EdgePlusOnDemand(trace, config);
    case Algorithm::kWang:
      return WangOnline(trace, config);
    case Algorithm::kEdgeWang:
      return EdgePlusWang(trace, config);
    case Algorithm::kOnDemand:
      return PureOnDemand(trace, config);
    case Algorithm::kOracle: {
      const DemandTrace padded = PadToPeriod(trace, config.reservation_period());
      OracleResult r = OptimalExhaustive(padded, config, oracle_budget);
      PlanResult result;
      result.schedule = Allocate(padded, r.plan, config);
      result.plan = std::move(r.plan);
      result.cost = ScheduleCost(result.plan, result.schedule, config);
      return result;
    }
  }
  throw ValidationError("unknown algorithm");
}

std::vector<ComparisonRow> RunComparison(const DemandTrace& trace, const PricingConfig& config,
                                         std::span<const Algorithm> algorithms, std::uint64_t oracle_budget) {
  const std::int64_t horizon = trace.horizon();
  const Money reference = config.on_demand_price() * trace.total();

  std::vector<ComparisonRow> rows;
  for (Algorithm algorithm : algorithms) {
    PlanResult result = RunAlgorithm(algorithm, trace, config, oracle_budget);
    ComparisonRow row;
    row.algorithm = algorithm;
    row.cost = ScheduleCost(result.plan, result.schedule, config, 0, horizon);
    row.totals = RangeTotals(result.schedule, horizon);
    if (reference > Money()) {
      row.saving = 1.0 - static_cast<double>(row.cost.raw_total.micros()) / static_cast<double>(reference.micros());
    }
    row.plan = std::move(result.plan);
    rows.push_back(std::move(row));
  }
  return rows;
}

void SweepSpec::Validate() const {
  for (double phi : phis) {
    if (!(phi > 0)) throw InvalidParameter("phi values must be positive");
  }
  for (std::int64_t tau : periods) {
    if (tau < 1) throw InvalidParameter("reservation periods must be positive");
  }
  if (!(default_phi > 0)) throw InvalidParameter("default phi must be positive");
  if (algorithms.empty()) throw InvalidParameter("no algorithms to sweep");
}

double DemandStdDev(const DemandTrace& trace) {
  const auto n = static_cast<double>(trace.horizon());
  const double mean = static_cast<double>(trace.total()) / n;
  double squares = 0.0;
  for (std::int64_t d : trace.demands()) squares += (static_cast<double>(d) - mean) * (static_cast<double>(d) - mean);
  return std::sqrt(squares / n);
}

std::int64_t CapacityForPhi(const DemandTrace& trace, double phi) {
  return static_cast<std::int64_t>(std::llround(phi * DemandStdDev(trace)));
}

Money ScaledUpfront(const PricingConfig& base, std::int64_t period) {
  const std::int64_t scaled = static_cast<std::int64_t>(base.upfront_price().micros()) * period;
  const std::int64_t tau = base.reservation_period();
  return Micros(static_cast<std::int64_t>((scaled + tau / 2) / tau));
}

std::vector<SweepRow> Sweep(std::span<const NamedTrace> traces, const PricingConfig& base, const SweepSpec& spec) {
  spec.Validate();
  std::vector<SweepRow> rows;
  auto emit = [&](const NamedTrace& named, std::string_view vary, double value, const PricingConfig& config) {
    for (ComparisonRow& r : RunComparison(named.trace, config, spec.algorithms)) {
      rows.push_back({.group = named.group,
                      .vary = std::string(vary),
                      .value = value,
                      .algorithm = r.algorithm,
                      .edge_capacity = config.edge_capacity(),
                      .period = config.reservation_period(),
                      .upfront = config.upfront_price(),
                      .cost = r.cost,
                      .totals = r.totals,
                      .saving = r.saving});
    }
  };

  for (const NamedTrace& named : traces) {
    if (spec.vary_phi) {
      for (double phi : spec.phis) {
        emit(named, "phi", phi, base.WithEdgeCapacity(CapacityForPhi(named.trace, phi)));
      }
    }
    if (spec.vary_period) {
      const PricingConfig with_edge = base.WithEdgeCapacity(CapacityForPhi(named.trace, spec.default_phi));
      for (std::int64_t tau : spec.periods) {
        emit(named, "tau", static_cast<double>(tau), with_edge.WithPeriod(tau, ScaledUpfront(base, tau)));
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.group, a.vary, a.value, a.algorithm) < std::tie(b.group, b.vary, b.value, b.algorithm);
  });
  return rows;
}

std::vector<NamedTrace> SyntheticGroups(std::uint64_t seed, std::int64_t horizon, int users_per_group) {
  const auto users = SynthUsers(seed, horizon, users_per_group);
  const FluctuationGroups groups = GroupByFluctuation(users, IngestConfig{});
  std::vector<NamedTrace> traces;
  const std::pair<const char*, const std::vector<std::string>*> named[] = {
      {"group1", &groups.high}, {"group2", &groups.medium}, {"group3", &groups.low}};
  for (const auto& [name, members] : named) {
    if (!members->empty()) traces.push_back({name, AggregateDemand(users, *members)});
  }
  return traces;
}

RandomInstance RandomSmallInstance(Rng& rng, std::int64_t max_horizon, std::int64_t max_peak) {
  if (max_horizon < 1 || max_peak < 0) throw InvalidParameter("bad random instance bounds");
  const std::int64_t tau = rng.UniformInt(1, std::min<std::int64_t>(4, max_horizon));
  const std::int64_t intervals = rng.UniformInt(1, max_horizon / tau);
  std::vector<std::int64_t> demands(static_cast<std::size_t>(tau * intervals));
  for (auto& d : demands) d = rng.UniformInt(0, max_peak);

  const std::int64_t theta = rng.UniformInt(0, 3);
  const std::int64_t lambda = rng.UniformInt(1, 8);
  const std::int64_t p = lambda + rng.UniformInt(1, 16);
  PricingTerms terms{.on_demand_price = Micros(theta + p),
                     .reserved_usage_price = Micros(theta),
                     .upfront_price = Micros(rng.UniformInt(0, 2 * p * tau)),
                     .edge_unit_cost = Micros(theta + lambda),
                     .reservation_period = tau,
                     .edge_capacity = rng.UniformInt(0, max_peak)};
  return {DemandTrace(std::move(demands)), PricingConfig::Create(terms)};
}

std::string InstanceJson(const DemandTrace& trace, const PricingConfig& config) {
  nlohmann::ordered_json j;
  j["demands"] = std::vector<std::int64_t>(trace.demands().begin(), trace.demands().end());
  j["p_prime"] = config.on_demand_price().micros();
  j["theta"] = config.reserved_usage_price().micros();
  j["gamma"] = config.upfront_price().micros();
  j["lambda_prime"] = config.edge_unit_cost().micros();
  j["tau"] = config.reservation_period();
  j["w"] = config.edge_capacity();
  return j.dump();
}

namespace {

[[noreturn]] void ReportViolation(std::string_view check, const RandomInstance& instance, Money cost, Money optimum,
                                  const std::string& bound) {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["bound"] = bound;
  j["cost"] = cost.micros();
  j["optimum"] = optimum.micros();
  j["instance"] = nlohmann::ordered_json::parse(InstanceJson(instance.trace, instance.config));
  throw RatioViolation(std::string(check) + " exceeded " + bound, j.dump());
}

}  // namespace

RatioReport VerifyRatios(const RatioCheckSpec& spec) {
  if (spec.count < 0) throw InvalidParameter("instance count must be non-negative");
  Rng rng(spec.seed);
  RatioReport report;
  double worst_online_slack = 0.0;
  for (std::int64_t i = 0; i < spec.count; ++i) {
    const RandomInstance instance = RandomSmallInstance(rng, spec.max_horizon, spec.max_peak);
    const PricingConfig& config = instance.config;
    const Money optimum = OptimalExhaustive(instance.trace, config, spec.oracle_budget).objective;

    const Money offline = PlanOffline(instance.trace, config).cost.normalized_objective;
    if (offline > optimum * 2) ReportViolation("offline", instance, offline, optimum, "2");
    report.worst_offline = std::max(report.worst_offline, Ratio(offline, optimum));

    const Money aligned = OptimalIntervalAligned(instance.trace, config).objective;
    if (offline != aligned) ReportViolation("offline-aligned", instance, offline, aligned, "equality");

    // online <= max{6, 2p/lambda} * opt, compared as online * lambda <=
    // max{6 lambda, 2p} * opt.
    const Money lambda = config.normalized_edge();
    const Money p = config.normalized_on_demand();
    const std::int64_t bound_numerator = std::max(6 * lambda.micros(), 2 * p.micros());
    const Money online = RunOnline(instance.trace, config).cost.normalized_objective;
    const double bound = static_cast<double>(bound_numerator) / static_cast<double>(lambda.micros());
    if (static_cast<std::int64_t>(online.micros()) * lambda.micros() >
        static_cast<std::int64_t>(bound_numerator) * optimum.micros()) {
      ReportViolation("online", instance, online, optimum, "max{6, 2p/lambda}");
    }
    const double online_ratio = Ratio(online, optimum);
    if (online_ratio / bound > worst_online_slack) {
      worst_online_slack = online_ratio / bound;
      report.worst_online = online_ratio;
      report.online_bound_at_worst = bound;
    }

    const PricingConfig no_edge = config.WithEdgeCapacity(0);
    const Money optimum_no_edge = OptimalExhaustive(instance.trace, no_edge, spec.oracle_budget).objective;
    const Money online_no_edge = RunOnline(instance.trace, no_edge).cost.normalized_objective;
    if (online_no_edge > optimum_no_edge * 4) {
      ReportViolation("online-no-edge", {instance.trace, no_edge}, online_no_edge, optimum_no_edge, "4");
    }
    report.worst_online_no_edge = std::max(report.worst_online_no_edge, Ratio(online_no_edge, optimum_no_edge));
    ++report.instances;
  }
  return report;
}

}  // namespace edgeplan
