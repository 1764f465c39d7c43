#ifndef DCC_METRICS_FLOW_TRACE_H_
#define DCC_METRICS_FLOW_TRACE_H_

#include <optional>
#include <string>
#include <vector>

#include "dcc/common/units.h"

namespace dcc::metrics {

struct SendRecord {
  Timestamp at{0};
  PacketNumber packet_number = 0;
  ByteCount bytes = 0;
  bool retransmission = false;
};

struct DeliveryRecord {
  Timestamp at{0};
  ByteCount bytes = 0;
  // False for a copy of a chunk the receiver already had.
  bool new_data = true;
  // Delivered by a retransmission; latency is measured from the chunk's
  // first transmission.
  bool via_retransmission = false;
  Duration latency{0};
};

struct DropRecord {
  Timestamp at{0};
  PacketNumber packet_number = 0;
  ByteCount bytes = 0;
};

struct RttRecord {
  Timestamp at{0};
  Duration rtt{0};
};

// One row per processed ACK.
struct SeriesRow {
  Timestamp at{0};
  ByteCount cwnd_bytes = 0;
  std::optional<Duration> rtt;
  Duration owqd{0};
  ByteCount queue_bytes = 0;
};

struct ReactionRecord {
  Timestamp at{0};
  std::string kind;
  ByteCount cwnd_after = 0;
};

// Everything a flow emits while it runs. Filled by the transport; consumed
// by the report functions.
struct FlowTrace {
  FlowId flow = 0;
  std::string cca;
  std::vector<SendRecord> sends;
  std::vector<DeliveryRecord> deliveries;
  std::vector<DropRecord> drops;
  std::vector<RttRecord> rtts;
  std::vector<SeriesRow> series;
  std::vector<ReactionRecord> reactions;
  std::uint64_t declared_lost = 0;
  std::uint64_t rto_count = 0;
  bool completed = false;
  bool aborted = false;
};

}  // namespace dcc::metrics

#endif  // DCC_METRICS_FLOW_TRACE_H_
