#ifndef DCC_TRANSPORT_PACKET_H_
#define DCC_TRANSPORT_PACKET_H_

#include <cstdint>
#include <vector>

#include "dcc/common/units.h"

namespace dcc::transport {

// A data datagram. Every transmission, including a retransmission of old
// stream data, gets a fresh packet number.
struct Packet {
  FlowId flow_id = 0;
  PacketNumber packet_number = 0;
  ByteCount size_bytes = 0;
  Timestamp sent_at{0};
  // Stream chunk carried by this datagram. The transfer is cut into
  // fixed-size chunks, one per datagram.
  std::uint64_t chunk = 0;
  bool carries_new_data = true;
  // Send time of the chunk's first transmission; equals sent_at for new data.
  Timestamp chunk_first_sent_at{0};
};

struct PacketRange {
  PacketNumber first = 0;  // inclusive
  PacketNumber last = 0;   // inclusive

  bool Contains(PacketNumber pn) const { return pn >= first && pn <= last; }
  friend bool operator==(const PacketRange&, const PacketRange&) = default;
};

struct ReceiveTimestamp {
  PacketNumber packet_number = 0;
  // Arrival time as read on the receiver's clock.
  Timestamp received_at{0};
};

struct AckFrame {
  FlowId flow_id = 0;
  PacketNumber largest_acked = 0;
  // Disjoint ranges in descending order (highest first).
  std::vector<PacketRange> acked_ranges;
  // Packets received since the previous ACK, in arrival order.
  std::vector<ReceiveTimestamp> recv_timestamps;

  bool Acks(PacketNumber pn) const {
    for (const auto& r : acked_ranges) {
      if (r.Contains(pn)) return true;
    }
    return false;
  }
};

inline constexpr ByteCount kAckFrameBytes = 40;
inline constexpr ByteCount kDefaultPacketBytes = 1252;

}  // namespace dcc::transport

#endif  // DCC_TRANSPORT_PACKET_H_
