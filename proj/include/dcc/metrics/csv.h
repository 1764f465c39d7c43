#ifndef DCC_METRICS_CSV_H_
#define DCC_METRICS_CSV_H_

#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dcc/common/units.h"
#include "dcc/metrics/flow_trace.h"

namespace dcc::metrics {

// summary.csv columns, in order:
//   flow,cca,threshold,buffer_bdp,gput_mbps,tput_mbps,loss_pct,
//   rtt_avg_ms,rtt_std_ms,jfi
// `threshold` is the delay threshold as a fraction of buffer drain time, or
// "-" for controllers without one.
struct SummaryRow {
  std::string flow;
  std::string cca;
  std::string threshold = "-";
  double buffer_bdp = 0.0;
  double gput_mbps = 0.0;
  double tput_mbps = 0.0;
  double loss_pct = 0.0;
  double rtt_avg_ms = 0.0;
  double rtt_std_ms = 0.0;
  double jfi = 0.0;
};

inline constexpr const char* kSummaryHeader =
    "flow,cca,threshold,buffer_bdp,gput_mbps,tput_mbps,loss_pct,rtt_avg_ms,"
    "rtt_std_ms,jfi";
inline constexpr const char* kTimeSeriesHeader =
    "t_us,cwnd_bytes,rtt_us,owqd_us,queue_bytes";
inline constexpr const char* kCdfHeader = "rtt_ms,fraction";

void WriteSummaryCsv(std::ostream& out, std::span<const SummaryRow> rows);
std::string FormatSummaryRow(const SummaryRow& row);

// One row per ACK; rtt_us is empty on ACKs that produced no RTT sample.
void WriteTimeSeriesCsv(std::ostream& out, std::span<const SeriesRow> rows);

void WriteCdfCsv(std::ostream& out,
                 std::span<const std::pair<Duration, double>> cdf);

}  // namespace dcc::metrics

#endif  // DCC_METRICS_CSV_H_
