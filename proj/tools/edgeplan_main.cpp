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

// edgeplan: command-line front end for the procurement planners.
//
// Exit codes: 0 success, 1 I/O or internal error, 2 validation error,
// 3 ratio violation, 4 oracle budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgeplan/errors.hpp"
#include "edgeplan/experiment.hpp"
#include "edgeplan/ingest.hpp"
#include "edgeplan/io.hpp"
#include "edgeplan/synth.hpp"

namespace {

using namespace edgeplan;

constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitRatio = 3;
constexpr int kExitBudget = 4;

class IoError : public Error {
 public:
  using Error::Error;
};

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return in;
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw IoError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void WriteFile(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << contents;
}

DemandTrace LoadTrace(const std::string& path) {
  auto in = OpenInput(path);
  return ReadTraceCsv(in);
}

// The config file when given, otherwise the reference market. `w` overrides
// the capacity; without either, capacity is one standard deviation of demand.
PricingConfig LoadConfig(const std::string& path, std::optional<std::int64_t> w, const DemandTrace* trace) {
  if (!path.empty()) {
    auto in = OpenInput(path);
    PricingConfig config = ValidateConfig(ReadPricingTerms(in));
    return w ? config.WithEdgeCapacity(*w) : config;
  }
  if (w) return PricingConfig::ReferenceMarket(*w);
  return PricingConfig::ReferenceMarket(trace ? CapacityForPhi(*trace, 1.0) : 0);
}

std::vector<Algorithm> ParseAlgorithms(const std::vector<std::string>& names) {
  if (names.empty()) return {StandardAlgorithms().begin(), StandardAlgorithms().end()};
  std::vector<Algorithm> algorithms;
  for (const std::string& name : names) algorithms.push_back(ParseAlgorithm(name));
  return algorithms;
}

void WritePlotData(const std::filesystem::path& dir, const std::vector<SweepRow>& rows) {
  std::filesystem::create_directories(dir);
  std::ostringstream total_cost, saving_phi, breakdown, saving_tau, allocation;
  total_cost << "group,phi,algorithm,raw_total,normalized_objective\n";
  saving_phi << "group,phi,algorithm,saving\n";
  breakdown << "group,algorithm,reservation_cost,edge_cost,on_demand_cost,reserved_usage_cost\n";
  saving_tau << "group,tau,algorithm,saving\n";
  allocation << "group,tau,reserved_requests,edge_requests,on_demand_requests\n";
  for (const SweepRow& row : rows) {
    const std::string_view name = AlgorithmName(row.algorithm);
    if (row.vary == "phi") {
      total_cost << row.group << ',' << FormatFixed(row.value, 3) << ',' << name << ','
                 << row.cost.raw_total.ToDollarString() << ',' << row.cost.normalized_objective.ToDollarString()
                 << '\n';
      saving_phi << row.group << ',' << FormatFixed(row.value, 3) << ',' << name << ',' << FormatSaving(row.saving)
                 << '\n';
      if (row.value == 1.0) {
        breakdown << row.group << ',' << name << ',' << row.cost.reservation_cost.ToDollarString() << ','
                  << row.cost.edge_cost.ToDollarString() << ',' << row.cost.on_demand_cost.ToDollarString() << ','
                  << row.cost.reserved_usage_cost.ToDollarString() << '\n';
      }
    } else {
      saving_tau << row.group << ',' << row.period << ',' << name << ',' << FormatSaving(row.saving) << '\n';
      if (row.algorithm == Algorithm::kOnline) {
        allocation << row.group << ',' << row.period << ',' << row.totals.reserved << ',' << row.totals.edge << ','
                   << row.totals.on_demand << '\n';
      }
    }
  }
  WriteFile(dir / "fig3_phi_total_cost.csv", total_cost.str());
  WriteFile(dir / "fig4_phi_saving.csv", saving_phi.str());
  WriteFile(dir / "fig5_cost_breakdown.csv", breakdown.str());
  WriteFile(dir / "fig6_tau_saving.csv", saving_tau.str());
  WriteFile(dir / "fig7_online_allocation.csv", allocation.str());
}

int Run(int argc, char** argv) {
  CLI::App app{"Hybrid edge-cloud VM procurement planner"};
  app.require_subcommand(1);

  // ingest
  std::string events_path, out_path;
  IngestConfig ingest_config;
  bool aggregate = false;
  auto* ingest = app.add_subcommand("ingest", "Per-user hourly demand from a task event CSV");
  ingest->add_option("--events", events_path, "CSV with header timestamp_us,user_id,task_id")->required();
  ingest->add_option("--slot-seconds", ingest_config.slot_seconds, "Slot length in seconds")->capture_default_str();
  ingest->add_option("--epoch-us", ingest_config.epoch_us, "Timestamp of slot 0")->capture_default_str();
  ingest->add_option("--high", ingest_config.high_fluctuation, "Group 1 threshold (std/mean)")->capture_default_str();
  ingest->add_option("--low", ingest_config.low_fluctuation, "Group 3 threshold (std/mean)")->capture_default_str();
  ingest->add_flag("--aggregate", aggregate, "Emit one aggregate trace per fluctuation group");
  ingest->add_option("--out", out_path, "Output file (default stdout)");

  // synth
  SynthSpec synth_spec;
  auto* synth = app.add_subcommand("synth", "Seeded synthetic demand trace");
  synth->add_option("--seed", synth_spec.seed)->capture_default_str();
  synth->add_option("-T,--horizon", synth_spec.horizon, "Number of slots")->capture_default_str();
  synth->add_option("--mean", synth_spec.mean)->capture_default_str();
  synth->add_option("--fluctuation", synth_spec.fluctuation, "Target std/mean")->capture_default_str();
  synth->add_option("--peak-cap", synth_spec.peak_cap, "Clamp demand (0 = none)")->capture_default_str();
  synth->add_option("--out", out_path);

  // plan
  std::string trace_path, config_path, algorithm_name;
  std::optional<std::int64_t> capacity;
  std::uint64_t budget = kDefaultOracleBudget;
  bool summary = false;
  auto* plan = app.add_subcommand("plan", "Run one algorithm and print the per-slot plan");
  plan->add_option("--algorithm", algorithm_name, "offline, online, e-od, wang, e-wang, ondemand or oracle")
      ->required();
  plan->add_option("--trace", trace_path, "CSV with header slot,demand")->required();
  plan->add_option("--config", config_path, "key=value pricing file (default: reference market)");
  plan->add_option("--w", capacity, "Override the edge capacity");
  plan->add_option("--budget", budget, "Oracle node budget")->capture_default_str();
  plan->add_flag("--summary", summary, "Print the cost breakdown instead of the per-slot plan");
  plan->add_option("--out", out_path);

  // compare
  std::vector<std::string> algorithm_names;
  std::string plot_dir;
  auto* compare = app.add_subcommand("compare", "Cost and savings of several algorithms on one trace");
  compare->add_option("--trace", trace_path)->required();
  compare->add_option("--config", config_path);
  compare->add_option("--w", capacity);
  compare->add_option("--algorithms", algorithm_names, "Subset to run")->delimiter(',');
  compare->add_option("--budget", budget)->capture_default_str();
  compare->add_option("--out", out_path);
  compare->add_option("--plot-data", plot_dir, "Directory for plot-ready CSVs");

  // sweep
  SweepSpec sweep_spec;
  std::string vary = "both";
  std::uint64_t seed = 7;
  std::int64_t horizon = 672;
  int users_per_group = 8;
  auto* sweep = app.add_subcommand("sweep", "Savings across edge capacities and reservation periods");
  sweep->add_option("--vary", vary, "phi, tau or both")
      ->check(CLI::IsMember({"phi", "tau", "both"}))
      ->capture_default_str();
  sweep->add_option("--seed", seed, "Seed for the synthetic user population")->capture_default_str();
  sweep->add_option("-T,--horizon", horizon, "Synthetic horizon in slots")->capture_default_str();
  sweep->add_option("--users-per-group", users_per_group)->capture_default_str();
  sweep->add_option("--trace", trace_path, "Sweep a single trace instead of synthetic groups");
  sweep->add_option("--events", events_path, "Sweep the fluctuation groups of an event CSV");
  sweep->add_option("--config", config_path, "Base pricing (default: reference market)");
  sweep->add_option("--phi", sweep_spec.phis, "Capacity multiples of the demand std-dev")->delimiter(',');
  sweep->add_option("--tau", sweep_spec.periods, "Reservation periods")->delimiter(',');
  sweep->add_option("--algorithms", algorithm_names)->delimiter(',');
  sweep->add_option("--out", out_path);
  sweep->add_option("--plot-data", plot_dir);

  // verify-ratios
  RatioCheckSpec ratio_spec;
  auto* verify = app.add_subcommand("verify-ratios", "Check planner ratios against the exact optimum");
  verify->add_option("--seed", ratio_spec.seed)->capture_default_str();
  verify->add_option("--count", ratio_spec.count)->capture_default_str();
  verify->add_option("--max-T", ratio_spec.max_horizon)->capture_default_str();
  verify->add_option("--max-peak", ratio_spec.max_peak)->capture_default_str();
  verify->add_option("--budget", ratio_spec.oracle_budget)->capture_default_str();
  verify->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  if (*ingest) {
    auto in = OpenInput(events_path);
    const IngestResult result = IngestTrace(in, ingest_config);
    if (result.malformed > 0) std::cerr << "skipped " << result.malformed << " malformed records\n";
    const FluctuationGroups groups = GroupByFluctuation(result.users, ingest_config);
    Output out(out_path);
    const std::pair<const char*, const std::vector<std::string>*> named[] = {
        {"group1", &groups.high}, {"group2", &groups.medium}, {"group3", &groups.low}, {"zero", &groups.zero_mean}};
    if (aggregate) {
      out.stream() << "group,slot,demand\n";
      for (const auto& [name, members] : named) {
        if (members->empty() || std::string_view(name) == "zero") continue;
        const DemandTrace total = AggregateDemand(result.users, *members);
        for (std::int64_t t = 0; t < total.horizon(); ++t) out.stream() << name << ',' << t << ',' << total[t] << '\n';
      }
    } else {
      out.stream() << "user_id,group,slot,demand\n";
      for (const auto& [name, members] : named) {
        for (const std::string& user : *members) {
          const DemandTrace& trace = result.users.at(user);
          for (std::int64_t t = 0; t < trace.horizon(); ++t) {
            out.stream() << user << ',' << name << ',' << t << ',' << trace[t] << '\n';
          }
        }
      }
    }
    return 0;
  }

  if (*synth) {
    Output out(out_path);
    WriteTraceCsv(out.stream(), SynthDemand(synth_spec));
    return 0;
  }

  if (*plan) {
    const DemandTrace trace = LoadTrace(trace_path);
    const PricingConfig config = LoadConfig(config_path, capacity, &trace);
    const Algorithm algorithm = ParseAlgorithm(algorithm_name);
    const PlanResult result = RunAlgorithm(algorithm, trace, config, budget);
    Output out(out_path);
    if (summary) {
      out.stream() << "algorithm,";
      WriteCostHeader(out.stream());
      out.stream() << '\n' << AlgorithmName(algorithm) << ',';
      WriteCostFields(out.stream(), result.cost);
      out.stream() << '\n';
    } else {
      WritePlanCsv(out.stream(), trace, result, config);
    }
    return 0;
  }

  if (*compare) {
    const DemandTrace trace = LoadTrace(trace_path);
    const PricingConfig config = LoadConfig(config_path, capacity, &trace);
    const auto rows = RunComparison(trace, config, ParseAlgorithms(algorithm_names), budget);
    Output out(out_path);
    WriteComparisonCsv(out.stream(), rows);
    if (!plot_dir.empty()) {
      std::filesystem::create_directories(plot_dir);
      std::ostringstream csv;
      WriteComparisonCsv(csv, rows);
      WriteFile(std::filesystem::path(plot_dir) / "comparison.csv", csv.str());
    }
    return 0;
  }

  if (*sweep) {
    sweep_spec.vary_phi = vary != "tau";
    sweep_spec.vary_period = vary != "phi";
    sweep_spec.algorithms = ParseAlgorithms(algorithm_names);
    std::vector<NamedTrace> traces;
    if (!trace_path.empty()) {
      traces.push_back({"trace", LoadTrace(trace_path)});
    } else if (!events_path.empty()) {
      auto in = OpenInput(events_path);
      const IngestResult result = IngestTrace(in, IngestConfig{});
      const FluctuationGroups groups = GroupByFluctuation(result.users, IngestConfig{});
      const std::pair<const char*, const std::vector<std::string>*> named[] = {
          {"group1", &groups.high}, {"group2", &groups.medium}, {"group3", &groups.low}};
      for (const auto& [name, members] : named) {
        if (!members->empty()) traces.push_back({name, AggregateDemand(result.users, *members)});
      }
    } else {
      traces = SyntheticGroups(seed, horizon, users_per_group);
    }
    const PricingConfig base = LoadConfig(config_path, std::nullopt, nullptr);
    const auto rows = Sweep(traces, base, sweep_spec);
    Output out(out_path);
    WriteSweepCsv(out.stream(), rows);
    if (!plot_dir.empty()) WritePlotData(plot_dir, rows);
    return 0;
  }

  if (*verify) {
    const RatioReport report = VerifyRatios(ratio_spec);
    Output out(out_path);
    WriteRatioReportCsv(out.stream(), report);
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const RatioViolation& e) {
    std::cerr << "ratio violation: " << e.what() << '\n' << e.counterexample() << '\n';
    return kExitRatio;
  } catch (const BudgetExceeded& e) {
    std::cerr << "oracle budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
