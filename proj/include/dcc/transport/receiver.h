#ifndef DCC_TRANSPORT_RECEIVER_H_
#define DCC_TRANSPORT_RECEIVER_H_

#include <map>
#include <optional>
#include <vector>

#include "dcc/common/units.h"
#include "dcc/metrics/flow_trace.h"
#include "dcc/netsim/clock_model.h"
#include "dcc/transport/packet.h"

namespace dcc::transport {

struct ReceiverConfig {
  FlowId flow = 0;
  // One ACK per `ack_ratio` received packets.
  std::uint32_t ack_ratio = 1;
  // Flush deadline for a partially filled ACK when ack_ratio > 1.
  Duration max_ack_delay = Millis(25);
  std::size_t max_ack_ranges = 32;
  netsim::ClockModel clock;
};

// Records arrivals on the receiver clock and reports them back in ACK frames.
// Stream chunks are delivered to the application once, however many copies
// arrive.
class Receiver {
 public:
  explicit Receiver(const ReceiverConfig& config,
                    metrics::FlowTrace* trace = nullptr);

  // `now` is true (simulator) time; the recorded timestamp goes through the
  // clock model.
  std::optional<AckFrame> OnPacket(const Packet& packet, Timestamp now);
  // Flushes a pending partial ACK.
  std::optional<AckFrame> OnAckTimer(Timestamp now);

  bool ack_pending() const { return !pending_.empty(); }
  std::optional<Timestamp> ack_deadline() const { return ack_deadline_; }

  ByteCount unique_bytes() const { return unique_bytes_; }
  std::uint64_t unique_chunks() const { return unique_chunks_; }
  std::uint64_t duplicate_packets() const { return duplicate_packets_; }
  std::uint64_t duplicate_chunks() const { return duplicate_chunks_; }
  std::optional<Timestamp> last_new_delivery() const {
    return last_new_delivery_;
  }
  // Received packet-number ranges, keyed by first.
  const std::map<PacketNumber, PacketNumber>& received() const {
    return received_;
  }

 private:
  bool RecordPacketNumber(PacketNumber pn);
  AckFrame BuildAck();

  ReceiverConfig config_;
  metrics::FlowTrace* trace_;
  std::map<PacketNumber, PacketNumber> received_;
  std::vector<bool> chunk_seen_;
  std::vector<ReceiveTimestamp> pending_;
  std::optional<Timestamp> ack_deadline_;
  ByteCount unique_bytes_ = 0;
  std::uint64_t unique_chunks_ = 0;
  std::uint64_t duplicate_packets_ = 0;
  std::uint64_t duplicate_chunks_ = 0;
  std::optional<Timestamp> last_new_delivery_;
};

}  // namespace dcc::transport

#endif  // DCC_TRANSPORT_RECEIVER_H_
