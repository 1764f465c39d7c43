#ifndef DCC_TRANSPORT_SENDER_H_
#define DCC_TRANSPORT_SENDER_H_

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "dcc/cc/congestion_controller.h"
#include "dcc/common/units.h"
#include "dcc/metrics/flow_trace.h"
#include "dcc/transport/packet.h"
#include "dcc/transport/pacer.h"
#include "dcc/transport/rtt_estimator.h"

namespace dcc::transport {

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SenderConfig {
  FlowId flow = 0;
  ByteCount packet_bytes = kDefaultPacketBytes;
  // Unset means an unbounded transfer, stopped with StopNewData().
  std::optional<ByteCount> transfer_bytes;
  PacketNumber reorder_threshold = 3;
  Duration initial_rto = Millis(333);
  Duration min_rto = Millis(200);
  bool pacing = true;
  Duration pacing_interval = Micros(200);
};

struct AckOutcome {
  ByteCount newly_acked_bytes = 0;
  std::optional<Duration> rtt_sample;
  std::vector<PacketNumber> lost_packets;
  std::vector<cc::TimestampPair> timestamp_pairs;
};

struct RtoOutcome {
  bool fired = false;
  std::optional<std::uint64_t> retransmit_chunk;
  Duration next_rto{0};
};

// Window-limited, paced sender of a chunked byte stream. Every datagram gets
// a new packet number; lost chunks are queued for retransmission and go out
// before new data.
class Sender {
 public:
  Sender(const SenderConfig& config, cc::CongestionController& controller,
         metrics::FlowTrace* trace = nullptr);

  // Packets authorized right now. With pacing on, at most one per call.
  std::vector<Packet> OnSendOpportunity(Timestamp now);

  // Throws ProtocolError if the ACK covers a packet number never sent.
  AckOutcome OnAck(const AckFrame& ack, Timestamp now);

  RtoOutcome OnRto(Timestamp now);

  // Stops handing out new chunks; retransmissions continue.
  void StopNewData() { new_data_stopped_ = true; }

  bool HasSendableData() const;
  // True when data is waiting, the window is open, and only the pacer holds
  // the next packet back.
  bool BlockedByPacer(Timestamp now) const;
  bool complete() const;

  std::optional<Timestamp> rto_deadline() const { return rto_deadline_; }
  const Pacer& pacer() const { return pacer_; }
  const RttEstimator& rtt() const { return rtt_; }
  ByteCount bytes_in_flight() const { return bytes_in_flight_; }
  PacketNumber next_packet_number() const { return next_pn_; }
  PacketNumber largest_acked() const { return largest_acked_; }
  std::size_t outstanding_packets() const { return outstanding_.size(); }
  std::size_t pending_retransmissions() const {
    return retransmit_queue_.size();
  }
  std::uint64_t chunk_count() const { return chunk_count_; }
  std::uint64_t acked_chunks() const { return acked_chunk_total_; }
  const SenderConfig& config() const { return config_; }

 private:
  struct SentPacket {
    std::uint64_t chunk = 0;
    ByteCount bytes = 0;
    Timestamp sent_at{0};
  };

  Packet BuildPacket(Timestamp now);
  ByteCount ChunkBytes(std::uint64_t chunk) const;
  bool ChunkAcked(std::uint64_t chunk) const;
  void MarkChunkAcked(std::uint64_t chunk);
  void DeclareLost(PacketNumber pn, const SentPacket& sp);
  void SkipAckedRetransmissions();
  bool HasNewData() const;

  SenderConfig config_;
  cc::CongestionController& controller_;
  metrics::FlowTrace* trace_;
  Pacer pacer_;
  RttEstimator rtt_;

  PacketNumber next_pn_ = 0;
  PacketNumber largest_acked_ = 0;
  bool any_acked_ = false;
  ByteCount bytes_in_flight_ = 0;
  std::optional<Timestamp> rto_deadline_;

  std::uint64_t chunk_count_ = 0;  // 0 for unbounded transfers
  std::uint64_t next_chunk_ = 0;
  std::uint64_t acked_chunk_total_ = 0;
  bool new_data_stopped_ = false;
  std::vector<bool> chunk_acked_;
  std::vector<Timestamp> chunk_first_sent_;
  std::set<std::uint64_t> retransmit_queue_;

  std::map<PacketNumber, SentPacket> outstanding_;
  // Declared lost but possibly still delivered late.
  std::map<PacketNumber, SentPacket> lost_;
  std::vector<Timestamp> sent_at_by_pn_;
};

}  // namespace dcc::transport

#endif  // DCC_TRANSPORT_SENDER_H_
