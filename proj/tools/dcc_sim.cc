// dcc-sim: runs congestion-control scenarios over the simulated bottleneck
// and writes CSV reports.

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcc/runner/presets.h"
#include "dcc/runner/runner.h"
#include "dcc/runner/scenario_io.h"

namespace {

using dcc::runner::ConfigError;
using dcc::runner::Scenario;

struct Overrides {
  std::optional<double> capacity_mbps;
  std::optional<double> rtt_min_ms;
  std::optional<double> buffer_bdp;
  std::vector<std::string> cca;
  std::optional<double> owqd_th_frac;
  std::optional<std::uint32_t> flows;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> reps;
  std::optional<double> warmup_s;
  std::optional<double> duration_s;
  std::optional<std::uint64_t> transfer_bytes;
};

struct OutputFlags {
  std::string out_dir = "dcc-out";
  bool csv = false;
  bool trace = false;
  bool emit = false;
};

void AddCommonFlags(CLI::App* app, Overrides& o, OutputFlags& out) {
  app->add_option("--capacity-mbps", o.capacity_mbps, "Bottleneck capacity");
  app->add_option("--rtt-min-ms", o.rtt_min_ms, "Round-trip propagation delay");
  app->add_option("--buffer-bdp", o.buffer_bdp, "Buffer as a multiple of BDP");
  app->add_option("--cca", o.cca,
                  "Controller(s): dc, westwood+, newreno, cubic")
      ->delimiter(',');
  app->add_option("--owqd-th-frac", o.owqd_th_frac,
                  "DC threshold as a fraction of buffer drain time");
  app->add_option("--flows", o.flows, "Number of flows");
  app->add_option("--seed", o.seed, "Base seed");
  app->add_option("--reps", o.reps, "Repetitions");
  app->add_option("--warmup-s", o.warmup_s,
                  "Seconds excluded from the start of the measurement window");
  app->add_option("--duration-s", o.duration_s,
                  "Fixed duration after the last flow start");
  app->add_option("--transfer-bytes", o.transfer_bytes, "Bytes per flow");
  app->add_option("--out-dir", out.out_dir, "Report directory");
  app->add_flag("--csv", out.csv, "Print summary.csv to stdout");
  app->add_flag("--trace", out.trace, "Also write the bottleneck queue trace");
  app->add_flag("--emit", out.emit,
                "Print the resolved scenario file and exit");
}

void ApplyOverrides(Scenario& s, const Overrides& o) {
  if (o.capacity_mbps) s.capacity_mbps = *o.capacity_mbps;
  if (o.rtt_min_ms) s.rtt_min_ms = *o.rtt_min_ms;
  if (o.buffer_bdp) {
    s.buffer_bdp = *o.buffer_bdp;
    s.buffer_bytes.reset();
  }
  if (!o.cca.empty()) {
    s.cca = o.cca;
    // A preset's threshold would otherwise make a non-dc override invalid.
    if (!s.HasDelayControlFlow() && !o.owqd_th_frac) {
      s.owqd_th_frac.reset();
      s.owqd_th_us.reset();
    }
  }
  if (o.owqd_th_frac) {
    s.owqd_th_frac = *o.owqd_th_frac;
    s.owqd_th_us.reset();
  }
  if (o.flows && *o.flows != s.flows) {
    s.flows = *o.flows;
    s.flow_start_offsets_ms.clear();
    if (s.flows > 1) {
      for (std::uint32_t i = 0; i < s.flows; ++i) {
        s.flow_start_offsets_ms.push_back(2000.0 * i);
      }
    }
  }
  if (o.seed) s.seed = *o.seed;
  if (o.reps) s.repetitions = *o.reps;
  if (o.warmup_s) s.warmup_s = *o.warmup_s;
  if (o.duration_s) {
    s.duration_s = *o.duration_s;
    s.transfer_bytes.reset();
  }
  if (o.transfer_bytes) {
    s.transfer_bytes = *o.transfer_bytes;
    s.duration_s.reset();
  }
}

void PrintTable(std::ostream& os, const dcc::runner::ScenarioReport& r) {
  fmt::print(os, "{}  ({} run(s), seeds {}..{})\n", r.scenario.name,
             r.runs.size(), r.scenario.seed,
             r.scenario.seed + r.runs.size() - 1);
  if (!r.scenario.description.empty()) {
    fmt::print(os, "  {}\n", r.scenario.description);
  }
  fmt::print(os, "  {:>4} {:>10} {:>6} {:>10} {:>10} {:>8} {:>10} {:>10}\n",
             "flow", "cca", "th", "gput_mbps", "tput_mbps", "loss_%",
             "rtt_ms", "rtt_std");
  for (const auto& row : r.SummaryRows()) {
    fmt::print(os,
               "  {:>4} {:>10} {:>6} {:>10.3f} {:>10.3f} {:>8.4f} {:>10.2f} "
               "{:>10.2f}\n",
               row.flow, row.cca, row.threshold, row.gput_mbps, row.tput_mbps,
               row.loss_pct, row.rtt_avg_ms, row.rtt_std_ms);
  }
  fmt::print(os, "  aggregate goodput {:.3f} Mbps, JFI {:.4f}\n",
             r.aggregate_goodput_bps.mean / 1e6, r.jain_index.mean);
}

int Emit(const Scenario& s) {
  s.Validate();
  std::cout << dcc::runner::EmitScenario(s);
  return 0;
}

int RunAndReport(const Scenario& s, const OutputFlags& out) {
  if (out.emit) return Emit(s);
  dcc::runner::RunOptions options;
  options.trace_queue = out.trace;
  const auto report = dcc::runner::RunScenario(s, options);
  dcc::runner::WriteReportFiles(report, out.out_dir, out.trace);
  if (out.csv) {
    std::ifstream in(std::filesystem::path(out.out_dir) / "summary.csv");
    std::cout << in.rdbuf();
  } else {
    PrintTable(std::cout, report);
    fmt::print("  reports written to {}\n", out.out_dir);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Congestion-control scenario simulator"};
  app.require_subcommand(1);

  Overrides run_o, preset_o, sweep_o;
  OutputFlags run_out, preset_out, sweep_out;

  std::string scenario_file;
  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("--scenario", scenario_file, "Scenario file")->required();
  AddCommonFlags(run, run_o, run_out);

  std::string preset_name;
  bool list = false;
  auto* preset = app.add_subcommand("preset", "Run a built-in preset");
  preset->add_option("name", preset_name, "Preset name");
  preset->add_flag("--list", list, "List presets and exit");
  AddCommonFlags(preset, preset_o, preset_out);

  std::string dim;
  std::vector<std::string> values;
  std::string sweep_scenario, sweep_preset;
  auto* sweep = app.add_subcommand("sweep", "Sweep one scenario dimension");
  sweep->add_option("--dim", dim, "buffer_bdp, owqd_th_frac or cca")
      ->required();
  sweep->add_option("--values", values, "Comma-separated values")
      ->delimiter(',')
      ->required();
  sweep->add_option("--scenario", sweep_scenario, "Base scenario file");
  sweep->add_option("--preset", sweep_preset, "Base preset");
  AddCommonFlags(sweep, sweep_o, sweep_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      Scenario s = dcc::runner::LoadScenarioFile(scenario_file);
      ApplyOverrides(s, run_o);
      return RunAndReport(s, run_out);
    }
    if (*preset) {
      if (list) {
        for (const auto& n : dcc::runner::PresetNames()) {
          fmt::print("{:<18} {}\n", n, dcc::runner::Preset(n).description);
        }
        return 0;
      }
      if (preset_name.empty()) throw ConfigError("preset name required");
      Scenario s = dcc::runner::Preset(preset_name);
      ApplyOverrides(s, preset_o);
      return RunAndReport(s, preset_out);
    }
    if (*sweep) {
      if (!sweep_scenario.empty() && !sweep_preset.empty()) {
        throw ConfigError("give --scenario or --preset, not both");
      }
      Scenario base;
      if (!sweep_scenario.empty()) {
        base = dcc::runner::LoadScenarioFile(sweep_scenario);
      } else if (!sweep_preset.empty()) {
        base = dcc::runner::Preset(sweep_preset);
      } else {
        base.name = "sweep";
      }
      ApplyOverrides(base, sweep_o);
      const auto d = dcc::runner::ParseSweepDimension(dim);
      if (sweep_out.emit) {
        for (const auto& v : values) {
          std::cout << dcc::runner::EmitScenario(
                           dcc::runner::ApplySweepValue(base, d, v))
                    << '\n';
        }
        return 0;
      }
      dcc::runner::RunOptions options;
      options.trace_queue = sweep_out.trace;
      const auto reports = dcc::runner::Sweep(base, d, values, options);
      const std::filesystem::path root(sweep_out.out_dir);
      std::filesystem::create_directories(root);
      std::ostringstream combined;
      dcc::runner::WriteSweepCsv(combined, d, values, reports);
      {
        std::ofstream f(root / "sweep.csv");
        f << combined.str();
      }
      for (std::size_t i = 0; i < reports.size(); ++i) {
        dcc::runner::WriteReportFiles(
            reports[i], root / fmt::format("{}={}", dim, values[i]),
            sweep_out.trace);
      }
      if (sweep_out.csv) {
        std::cout << combined.str();
      } else {
        for (const auto& r : reports) PrintTable(std::cout, r);
        fmt::print("combined report written to {}\n",
                   (root / "sweep.csv").string());
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    fmt::print(std::cerr, "configuration error: {}\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    fmt::print(std::cerr, "configuration error: {}\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    fmt::print(std::cerr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}
