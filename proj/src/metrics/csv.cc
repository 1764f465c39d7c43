#include "dcc/metrics/csv.h"

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace dcc::metrics {

std::string FormatSummaryRow(const SummaryRow& row) {
  return fmt::format("{},{},{},{:.2f},{:.4f},{:.4f},{:.4f},{:.3f},{:.3f},{:.4f}",
                     row.flow, row.cca, row.threshold, row.buffer_bdp,
                     row.gput_mbps, row.tput_mbps, row.loss_pct,
                     row.rtt_avg_ms, row.rtt_std_ms, row.jfi);
}

void WriteSummaryCsv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << kSummaryHeader << '\n';
  for (const auto& row : rows) out << FormatSummaryRow(row) << '\n';
}

void WriteTimeSeriesCsv(std::ostream& out, std::span<const SeriesRow> rows) {
  out << kTimeSeriesHeader << '\n';
  for (const auto& r : rows) {
    if (r.rtt) {
      fmt::print(out, "{},{},{},{},{}\n", r.at.count(), r.cwnd_bytes,
                 r.rtt->count(), r.owqd.count(), r.queue_bytes);
    } else {
      fmt::print(out, "{},{},,{},{}\n", r.at.count(), r.cwnd_bytes,
                 r.owqd.count(), r.queue_bytes);
    }
  }
}

void WriteCdfCsv(std::ostream& out,
                 std::span<const std::pair<Duration, double>> cdf) {
  out << kCdfHeader << '\n';
  for (const auto& [rtt, frac] : cdf) {
    fmt::print(out, "{:.3f},{:.6f}\n", ToMillis(rtt), frac);
  }
}

}  // namespace dcc::metrics
