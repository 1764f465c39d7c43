#include "dcc/runner/runner.h"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <random>
#include <set>

namespace dcc::runner {
namespace {

Duration FromSeconds(double s) {
  return Duration(static_cast<std::int64_t>(std::llround(s * 1e6)));
}

Timestamp DurationRunEnd(const Scenario& s) {
  return s.StartOffset(s.flows - 1) + FromSeconds(*s.duration_s);
}

double MeanOf(const std::vector<double>& v) {
  return metrics::ComputeMeanStd(v).mean;
}

double BufferMultiple(const Scenario& s) {
  if (!s.buffer_bytes) return s.buffer_bdp;
  return static_cast<double>(*s.buffer_bytes) /
         static_cast<double>(s.BdpBytes());
}

double ParseNumber(const std::string& text, std::string_view what) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw ConfigError(fmt::format("{}: not a number: '{}'", what, text));
  }
  return v;
}

}  // namespace

std::optional<metrics::MeasurementWindow> MeasurementWindowFor(
    const Scenario& s, const metrics::FlowTrace& trace) {
  if (s.duration_s) {
    const Timestamp start = s.StartOffset(s.flows - 1) + FromSeconds(s.warmup_s);
    return metrics::MeasurementWindow{start, DurationRunEnd(s)};
  }
  auto w = metrics::DefaultWindow(trace);
  if (w) w->start += FromSeconds(s.warmup_s);
  return w;
}

RunResult RunOnce(const Scenario& s, std::uint64_t seed,
                  const RunOptions& options) {
  s.Validate();
  RunResult result;
  result.seed = seed;
  result.buffer_bytes = s.BufferBytes();

  netsim::Simulator sim;
  netsim::Network network(sim, s.Link());
  if (options.trace_queue) network.EnableQueueTrace();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> jitter(0, s.start_jitter_us);
  const auto threshold = s.OwqdThreshold();

  std::vector<std::unique_ptr<transport::Flow>> flows;
  std::vector<transport::Flow*> flow_ptrs;
  std::uint32_t completed = 0;
  for (std::uint32_t i = 0; i < s.flows; ++i) {
    transport::FlowConfig fc;
    fc.id = i;
    fc.cca = s.CcaFor(i);
    fc.controller.base.mss = s.packet_bytes;
    if (fc.cca == "dc") fc.controller.owqd_threshold = threshold;
    fc.sender.packet_bytes = s.packet_bytes;
    fc.sender.transfer_bytes = s.transfer_bytes;
    fc.sender.pacing = s.pacing && s.pacing_interval_us > 0;
    fc.sender.pacing_interval = Micros(s.pacing_interval_us);
    fc.receiver.ack_ratio = s.ack_ratio;
    fc.receiver.clock.offset = Micros(s.receiver_offset_us);
    fc.receiver.clock.skew_ppm = s.receiver_skew_ppm;
    fc.start_at = s.StartOffset(i) + Micros(jitter(rng));
    fc.record_series = options.record_series;
    result.start_times.push_back(fc.start_at);
    flows.push_back(std::make_unique<transport::Flow>(sim, network, fc));
    flows.back()->set_on_complete([&] {
      if (++completed == s.flows) sim.Stop();
    });
    flow_ptrs.push_back(flows.back().get());
  }
  network.set_drop_observer([&flows](const transport::Packet& p, Timestamp t) {
    flows.at(p.flow_id)->trace().drops.push_back(
        metrics::DropRecord{t, p.packet_number, p.size_bytes});
  });
  if (options.on_setup) options.on_setup(sim, network, flow_ptrs);

  for (auto& f : flows) f->Start();
  const Timestamp until =
      s.duration_s ? DurationRunEnd(s) : FromSeconds(s.max_sim_s);
  result.sim = sim.Run(until);

  result.all_completed = s.transfer_bytes.has_value();
  std::vector<metrics::FlowReport> reports;
  for (auto& f : flows) {
    result.all_completed = result.all_completed && f->complete();
    result.counters.push_back(network.counters(f->id()));
    result.traces.push_back(std::move(f->trace()));
    const auto& trace = result.traces.back();
    reports.push_back(
        metrics::ComputeFlowReport(trace, MeasurementWindowFor(s, trace)));
  }
  if (!reports.empty()) result.window = reports.front().window;
  result.report = metrics::Aggregate(std::move(reports));
  result.max_queue_bytes = network.max_queue_bytes();
  if (options.trace_queue) result.queue_trace = network.queue_trace();
  return result;
}

std::vector<metrics::SummaryRow> ScenarioReport::SummaryRows() const {
  std::vector<metrics::SummaryRow> rows;
  std::vector<double> jfi;
  for (const auto& run : runs) jfi.push_back(run.report.jain_index);
  for (const auto& f : flows) {
    metrics::SummaryRow row;
    row.flow = std::to_string(f.flow);
    row.cca = f.cca;
    row.threshold = ThresholdLabel(scenario, f.cca);
    row.buffer_bdp = BufferMultiple(scenario);
    row.gput_mbps = f.goodput_bps.mean / 1e6;
    row.tput_mbps = f.throughput_bps.mean / 1e6;
    row.loss_pct = f.loss_pct.mean;
    row.rtt_avg_ms = f.rtt_mean_us.mean / 1e3;
    row.rtt_std_ms = f.rtt_std_us.mean / 1e3;
    row.jfi = MeanOf(jfi);
    rows.push_back(row);
  }
  return rows;
}

std::vector<Duration> ScenarioReport::PooledRttSamples(FlowId flow) const {
  std::vector<Duration> out;
  for (const auto& run : runs) {
    const auto& samples = run.report.per_flow.at(flow).rtt_samples;
    out.insert(out.end(), samples.begin(), samples.end());
  }
  return out;
}

std::vector<Duration> ScenarioReport::PooledRttSamples() const {
  std::vector<Duration> out;
  for (const auto& f : flows) {
    const auto samples = PooledRttSamples(f.flow);
    out.insert(out.end(), samples.begin(), samples.end());
  }
  return out;
}

ScenarioReport RunScenario(const Scenario& s, const RunOptions& options) {
  s.Validate();
  ScenarioReport report;
  report.scenario = s;
  for (std::uint32_t rep = 0; rep < s.repetitions; ++rep) {
    report.runs.push_back(RunOnce(s, s.seed + rep, options));
  }

  std::vector<double> jfi, agg, gput, loss, rtt;
  for (const auto& run : report.runs) {
    jfi.push_back(run.report.jain_index);
    agg.push_back(run.report.aggregate_goodput_bps);
    gput.push_back(run.report.goodput_bps.mean);
    loss.push_back(run.report.loss_pct.mean);
    rtt.push_back(run.report.rtt_mean_us.mean);
  }
  report.jain_index = metrics::ComputeMeanStd(jfi);
  report.aggregate_goodput_bps = metrics::ComputeMeanStd(agg);
  report.goodput_bps = metrics::ComputeMeanStd(gput);
  report.loss_pct = metrics::ComputeMeanStd(loss);
  report.rtt_mean_us = metrics::ComputeMeanStd(rtt);

  for (std::uint32_t i = 0; i < s.flows; ++i) {
    FlowSummary f;
    f.flow = i;
    f.cca = s.CcaFor(i);
    std::vector<double> g, t, l, rm, rs;
    for (const auto& run : report.runs) {
      const auto& fr = run.report.per_flow.at(i);
      g.push_back(fr.goodput_bps);
      t.push_back(fr.throughput_bps);
      l.push_back(fr.loss_pct);
      rm.push_back(fr.rtt_mean_us);
      rs.push_back(fr.rtt_std_us);
    }
    f.goodput_bps = metrics::ComputeMeanStd(g);
    f.throughput_bps = metrics::ComputeMeanStd(t);
    f.loss_pct = metrics::ComputeMeanStd(l);
    f.rtt_mean_us = metrics::ComputeMeanStd(rm);
    f.rtt_std_us = metrics::ComputeMeanStd(rs);
    report.flows.push_back(f);
  }
  return report;
}

SweepDimension ParseSweepDimension(std::string_view name) {
  if (name == "buffer_bdp") return SweepDimension::kBufferBdp;
  if (name == "owqd_th_frac") return SweepDimension::kOwqdThFrac;
  if (name == "cca") return SweepDimension::kCca;
  throw ConfigError(fmt::format(
      "unknown sweep dimension '{}' (buffer_bdp, owqd_th_frac, cca)", name));
}

std::string_view SweepDimensionName(SweepDimension dim) {
  switch (dim) {
    case SweepDimension::kBufferBdp:
      return "buffer_bdp";
    case SweepDimension::kOwqdThFrac:
      return "owqd_th_frac";
    case SweepDimension::kCca:
      return "cca";
  }
  return "unknown";
}

Scenario ApplySweepValue(const Scenario& base, SweepDimension dim,
                         const std::string& value) {
  Scenario s = base;
  switch (dim) {
    case SweepDimension::kBufferBdp:
      s.buffer_bdp = ParseNumber(value, "buffer_bdp");
      s.buffer_bytes.reset();
      break;
    case SweepDimension::kOwqdThFrac:
      s.owqd_th_frac = ParseNumber(value, "owqd_th_frac");
      s.owqd_th_us.reset();
      break;
    case SweepDimension::kCca:
      s.cca = {value};
      if (value != "dc") {
        s.owqd_th_frac.reset();
        s.owqd_th_us.reset();
      }
      break;
  }
  s.name = fmt::format("{}[{}={}]", base.name, SweepDimensionName(dim), value);
  return s;
}

std::vector<ScenarioReport> Sweep(const Scenario& base, SweepDimension dim,
                                  std::span<const std::string> values,
                                  const RunOptions& options) {
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  std::vector<Scenario> scenarios;
  for (const auto& v : values) {
    scenarios.push_back(ApplySweepValue(base, dim, v));
    scenarios.back().Validate();
  }
  std::vector<ScenarioReport> reports;
  for (const auto& s : scenarios) reports.push_back(RunScenario(s, options));
  return reports;
}

std::string ThresholdLabel(const Scenario& s, const std::string& cca) {
  if (cca != "dc") return "-";
  if (s.owqd_th_frac) return fmt::format("{}", *s.owqd_th_frac);
  if (s.owqd_th_us) {
    const double drain_us = 8e6 * static_cast<double>(s.BufferBytes()) /
                            static_cast<double>(s.capacity_bps());
    return fmt::format("{:.4g}", static_cast<double>(*s.owqd_th_us) / drain_us);
  }
  return "-";
}

void WriteSweepCsv(std::ostream& out, SweepDimension dim,
                   std::span<const std::string> values,
                   std::span<const ScenarioReport> reports) {
  fmt::print(out,
             "{},cca,threshold,buffer_bdp,gput_mbps,gput_std_mbps,"
             "agg_gput_mbps,tput_mbps,loss_pct,rtt_avg_ms,rtt_std_ms,jfi\n",
             SweepDimensionName(dim));
  for (std::size_t i = 0; i < reports.size() && i < values.size(); ++i) {
    const ScenarioReport& r = reports[i];
    std::set<std::string> ccas(r.scenario.cca.begin(), r.scenario.cca.end());
    std::vector<double> flow_std, tput, rtt_std;
    for (const auto& run : r.runs) {
      flow_std.push_back(run.report.goodput_bps.std);
      tput.push_back(run.report.throughput_bps.mean);
      std::vector<double> per_flow;
      for (const auto& f : run.report.per_flow) per_flow.push_back(f.rtt_std_us);
      rtt_std.push_back(MeanOf(per_flow));
    }
    fmt::print(out, "{},{},{},{},{:.3f},{:.3f},{:.3f},{:.3f},{:.4f},{:.2f},{:.2f},{:.4f}\n",
               values[i], fmt::join(ccas, "+"),
               ThresholdLabel(r.scenario, r.scenario.cca.front()),
               BufferMultiple(r.scenario), r.goodput_bps.mean / 1e6,
               MeanOf(flow_std) / 1e6, r.aggregate_goodput_bps.mean / 1e6,
               MeanOf(tput) / 1e6, r.loss_pct.mean, r.rtt_mean_us.mean / 1e3,
               MeanOf(rtt_std) / 1e3, r.jain_index.mean);
  }
}

void WriteReportFiles(const ScenarioReport& report,
                      const std::filesystem::path& dir, bool queue_trace) {
  std::filesystem::create_directories(dir);
  auto open = [&dir](const std::string& name) {
    std::ofstream out(dir / name);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    return out;
  };
  {
    auto out = open("summary.csv");
    const auto rows = report.SummaryRows();
    metrics::WriteSummaryCsv(out, rows);
  }
  for (const auto& f : report.flows) {
    const auto samples = report.PooledRttSamples(f.flow);
    auto cdf_out = open(fmt::format("cdf_{}.csv", f.flow));
    if (samples.empty()) {
      cdf_out << metrics::kCdfHeader << '\n';
    } else {
      const auto cdf = metrics::RttCdf(samples);
      metrics::WriteCdfCsv(cdf_out, cdf);
    }
    auto ts_out = open(fmt::format("timeseries_{}.csv", f.flow));
    if (report.runs.empty()) {
      ts_out << metrics::kTimeSeriesHeader << '\n';
    } else {
      metrics::WriteTimeSeriesCsv(ts_out,
                                  report.runs.front().traces.at(f.flow).series);
    }
  }
  if (queue_trace && !report.runs.empty() &&
      !report.runs.front().queue_trace.empty()) {
    auto out = open("queue.csv");
    out << "t_us,queue_bytes\n";
    for (const auto& [t, bytes] : report.runs.front().queue_trace) {
      out << t.count() << ',' << bytes << '\n';
    }
  }
}

}  // namespace dcc::runner
