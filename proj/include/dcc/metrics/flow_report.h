#ifndef DCC_METRICS_FLOW_REPORT_H_
#define DCC_METRICS_FLOW_REPORT_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dcc/common/units.h"
#include "dcc/metrics/flow_trace.h"

namespace dcc::metrics {

// Half-open measurement interval [start, end).
struct MeasurementWindow {
  Timestamp start{0};
  Timestamp end{0};
  Duration length() const { return end - start; }
  bool Contains(Timestamp t) const { return t >= start && t < end; }
};

struct FlowReport {
  FlowId flow = 0;
  std::string cca;
  // Unique application bytes delivered / window length.
  double goodput_bps = 0.0;
  // All transmitted bytes, retransmissions included / window length.
  double throughput_bps = 0.0;
  // Dropped packets / transmitted packets * 100.
  double loss_pct = 0.0;
  double rtt_mean_us = 0.0;
  double rtt_std_us = 0.0;
  std::uint64_t packets_sent = 0;
  std::uint64_t packets_dropped = 0;
  ByteCount unique_bytes = 0;
  ByteCount sent_bytes = 0;
  MeasurementWindow window;
  // Latency of data that needed a retransmission, first send to delivery.
  // Kept apart from RTT samples, which never cover it.
  std::uint64_t retransmitted_deliveries = 0;
  double retransmit_latency_mean_us = 0.0;
  std::vector<Duration> rtt_samples;
  std::vector<SeriesRow> series;
  // Set when the trace held nothing to measure.
  bool empty = false;
};

// Default window: first data send to last new-data delivery (end inclusive).
std::optional<MeasurementWindow> DefaultWindow(const FlowTrace& trace);

// An empty trace, or an empty window, yields a zeroed report with `empty` set.
FlowReport ComputeFlowReport(
    const FlowTrace& trace,
    std::optional<MeasurementWindow> window = std::nullopt);

// Empirical CDF: one step per distinct sample value, (value, fraction of
// samples <= value). Throws std::invalid_argument on an empty input.
std::vector<std::pair<Duration, double>> RttCdf(std::span<const Duration> samples);

// Smallest sample v with CDF(v) >= q, for q in (0, 1].
Duration Quantile(std::span<const Duration> samples, double q);

// (sum x)^2 / (n * sum x^2). Throws std::invalid_argument when the input is
// empty, contains a negative value, or is all zeros.
double JainIndex(std::span<const double> values);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};
// Population mean and standard deviation; zeros for an empty input.
MeanStd ComputeMeanStd(std::span<const double> values);

struct AggregateReport {
  std::vector<FlowReport> per_flow;
  double jain_index = 0.0;
  double aggregate_goodput_bps = 0.0;
  MeanStd goodput_bps;
  MeanStd throughput_bps;
  MeanStd loss_pct;
  MeanStd rtt_mean_us;
};

AggregateReport Aggregate(std::vector<FlowReport> flows);

}  // namespace dcc::metrics

#endif  // DCC_METRICS_FLOW_REPORT_H_
