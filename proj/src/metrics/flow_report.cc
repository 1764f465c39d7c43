#include "dcc/metrics/flow_report.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dcc::metrics {

std::optional<MeasurementWindow> DefaultWindow(const FlowTrace& trace) {
  if (trace.sends.empty()) return std::nullopt;
  std::optional<Timestamp> last;
  for (const auto& d : trace.deliveries) {
    if (d.new_data) last = d.at;
  }
  if (!last) return std::nullopt;
  return MeasurementWindow{trace.sends.front().at, *last + Micros(1)};
}

MeanStd ComputeMeanStd(std::span<const double> values) {
  MeanStd out;
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - out.mean) * (v - out.mean);
  out.std = std::sqrt(sq / static_cast<double>(values.size()));
  return out;
}

FlowReport ComputeFlowReport(const FlowTrace& trace,
                             std::optional<MeasurementWindow> window) {
  FlowReport r;
  r.flow = trace.flow;
  r.cca = trace.cca;
  if (!window) window = DefaultWindow(trace);
  if (!window || window->length().count() <= 0) {
    r.empty = true;
    return r;
  }
  r.window = *window;

  for (const auto& s : trace.sends) {
    if (!window->Contains(s.at)) continue;
    ++r.packets_sent;
    r.sent_bytes += s.bytes;
  }
  for (const auto& d : trace.drops) {
    if (window->Contains(d.at)) ++r.packets_dropped;
  }
  double retx_latency_sum = 0.0;
  for (const auto& d : trace.deliveries) {
    if (!window->Contains(d.at)) continue;
    if (d.new_data) r.unique_bytes += d.bytes;
    if (d.new_data && d.via_retransmission) {
      ++r.retransmitted_deliveries;
      retx_latency_sum += static_cast<double>(d.latency.count());
    }
  }
  if (r.retransmitted_deliveries > 0) {
    r.retransmit_latency_mean_us =
        retx_latency_sum / static_cast<double>(r.retransmitted_deliveries);
  }

  std::vector<double> rtt_values;
  for (const auto& s : trace.rtts) {
    if (!window->Contains(s.at)) continue;
    r.rtt_samples.push_back(s.rtt);
    rtt_values.push_back(static_cast<double>(s.rtt.count()));
  }
  const MeanStd rtt = ComputeMeanStd(rtt_values);
  r.rtt_mean_us = rtt.mean;
  r.rtt_std_us = rtt.std;

  for (const auto& row : trace.series) {
    if (window->Contains(row.at)) r.series.push_back(row);
  }

  r.goodput_bps = RateBps(r.unique_bytes, window->length());
  r.throughput_bps = RateBps(r.sent_bytes, window->length());
  if (r.packets_sent > 0) {
    r.loss_pct = 100.0 * static_cast<double>(r.packets_dropped) /
                 static_cast<double>(r.packets_sent);
  }
  r.loss_pct = std::clamp(r.loss_pct, 0.0, 100.0);
  r.empty = r.packets_sent == 0;
  return r;
}

std::vector<std::pair<Duration, double>> RttCdf(
    std::span<const Duration> samples) {
  if (samples.empty()) throw std::invalid_argument("CDF of no samples");
  std::vector<Duration> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<Duration, double>> cdf;
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
    cdf.emplace_back(sorted[i], static_cast<double>(i + 1) / n);
  }
  return cdf;
}

Duration Quantile(std::span<const Duration> samples, double q) {
  if (samples.empty()) throw std::invalid_argument("quantile of no samples");
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("q outside (0,1]");
  std::vector<Duration> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  // The slack keeps q = k/n from rounding up to k + 1.
  auto idx = static_cast<std::size_t>(std::ceil(q * n - 1e-9));
  idx = std::clamp<std::size_t>(idx, 1, sorted.size());
  return sorted[idx - 1];
}

double JainIndex(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("Jain index of no flows");
  double sum = 0.0;
  double sq = 0.0;
  for (double v : values) {
    if (v < 0.0) throw std::invalid_argument("negative share in Jain index");
    sum += v;
    sq += v * v;
  }
  if (sq == 0.0) throw std::invalid_argument("Jain index of all-zero shares");
  return sum * sum / (static_cast<double>(values.size()) * sq);
}

AggregateReport Aggregate(std::vector<FlowReport> flows) {
  AggregateReport a;
  std::vector<double> gput, tput, loss, rtt;
  for (const auto& f : flows) {
    gput.push_back(f.goodput_bps);
    tput.push_back(f.throughput_bps);
    loss.push_back(f.loss_pct);
    rtt.push_back(f.rtt_mean_us);
    a.aggregate_goodput_bps += f.goodput_bps;
  }
  a.goodput_bps = ComputeMeanStd(gput);
  a.throughput_bps = ComputeMeanStd(tput);
  a.loss_pct = ComputeMeanStd(loss);
  a.rtt_mean_us = ComputeMeanStd(rtt);
  bool any_positive = false;
  for (double g : gput) any_positive |= g > 0.0;
  a.jain_index = any_positive ? JainIndex(gput) : 0.0;
  a.per_flow = std::move(flows);
  return a;
}

}  // namespace dcc::metrics
