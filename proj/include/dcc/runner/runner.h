#ifndef DCC_RUNNER_RUNNER_H_
#define DCC_RUNNER_RUNNER_H_

#include <filesystem>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcc/metrics/csv.h"
#include "dcc/metrics/flow_report.h"
#include "dcc/metrics/flow_trace.h"
#include "dcc/netsim/network.h"
#include "dcc/netsim/simulator.h"
#include "dcc/runner/scenario.h"
#include "dcc/transport/flow.h"

namespace dcc::runner {

struct RunOptions {
  bool record_series = true;
  bool trace_queue = false;
  // Called after the network and flows are built and before any event
  // fires. Lets callers attach observers and hooks.
  std::function<void(netsim::Simulator&, netsim::Network&,
                     std::span<transport::Flow* const>)>
      on_setup;
};

// One seeded execution of a scenario.
struct RunResult {
  std::uint64_t seed = 0;
  std::vector<metrics::FlowTrace> traces;
  metrics::AggregateReport report;
  std::vector<netsim::FlowCounters> counters;
  std::vector<Timestamp> start_times;
  metrics::MeasurementWindow window;
  ByteCount buffer_bytes = 0;
  ByteCount max_queue_bytes = 0;
  netsim::SimSummary sim;
  std::vector<std::pair<Timestamp, ByteCount>> queue_trace;
  bool all_completed = false;
};

// Validates, then runs once with `seed`. Flow start jitter is drawn from a
// generator seeded with `seed`.
RunResult RunOnce(const Scenario& s, std::uint64_t seed,
                  const RunOptions& options = {});

// Window used for a run's reports. Duration runs measure from the last
// flow's nominal start to the end; transfer runs measure from first send to
// last new-data delivery, per flow.
std::optional<metrics::MeasurementWindow> MeasurementWindowFor(
    const Scenario& s, const metrics::FlowTrace& trace);

struct FlowSummary {
  FlowId flow = 0;
  std::string cca;
  metrics::MeanStd goodput_bps;
  metrics::MeanStd throughput_bps;
  metrics::MeanStd loss_pct;
  metrics::MeanStd rtt_mean_us;
  metrics::MeanStd rtt_std_us;
};

// All repetitions of a scenario, with mean and standard deviation across
// runs.
struct ScenarioReport {
  Scenario scenario;
  std::vector<RunResult> runs;
  std::vector<FlowSummary> flows;
  metrics::MeanStd jain_index;
  metrics::MeanStd aggregate_goodput_bps;
  // Per run, the mean over flows; then mean and std across runs.
  metrics::MeanStd goodput_bps;
  metrics::MeanStd loss_pct;
  metrics::MeanStd rtt_mean_us;

  // One row per flow, values averaged across runs.
  std::vector<metrics::SummaryRow> SummaryRows() const;
  // RTT samples of `flow` pooled over every run.
  std::vector<Duration> PooledRttSamples(FlowId flow) const;
  // RTT samples of every flow pooled over every run.
  std::vector<Duration> PooledRttSamples() const;
};

// Runs `repetitions` times with seeds seed, seed+1, ...
ScenarioReport RunScenario(const Scenario& s, const RunOptions& options = {});

enum class SweepDimension { kBufferBdp, kOwqdThFrac, kCca };

// Accepts buffer_bdp, owqd_th_frac and cca. Throws ConfigError otherwise.
SweepDimension ParseSweepDimension(std::string_view name);
std::string_view SweepDimensionName(SweepDimension dim);

// Copy of `base` with one dimension set to `value`. Switching a scenario's
// controller away from "dc" drops its delay threshold.
Scenario ApplySweepValue(const Scenario& base, SweepDimension dim,
                         const std::string& value);

// Throws ConfigError on an empty value list or any invalid derived
// scenario, before running anything.
std::vector<ScenarioReport> Sweep(const Scenario& base, SweepDimension dim,
                                  std::span<const std::string> values,
                                  const RunOptions& options = {});

// Columns: <dim>,cca,threshold,buffer_bdp,gput_mbps,gput_std_mbps,
// tput_mbps,loss_pct,rtt_avg_ms,rtt_std_ms,jfi. One row per swept value.
void WriteSweepCsv(std::ostream& out, SweepDimension dim,
                   std::span<const std::string> values,
                   std::span<const ScenarioReport> reports);

// Writes summary.csv, cdf_<id>.csv and timeseries_<id>.csv into `dir`
// (created if missing). The time series comes from the first run. With
// `queue_trace` set and a recorded trace, also writes queue.csv.
void WriteReportFiles(const ScenarioReport& report,
                      const std::filesystem::path& dir,
                      bool queue_trace = false);

std::string ThresholdLabel(const Scenario& s, const std::string& cca);

}  // namespace dcc::runner

#endif  // DCC_RUNNER_RUNNER_H_
