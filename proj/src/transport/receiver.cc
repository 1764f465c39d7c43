#include "dcc/transport/receiver.h"

#include <iterator>
#include <stdexcept>

namespace dcc::transport {

Receiver::Receiver(const ReceiverConfig& config, metrics::FlowTrace* trace)
    : config_(config), trace_(trace) {
  if (config.ack_ratio == 0) {
    throw std::invalid_argument("ack ratio must be at least 1");
  }
}

bool Receiver::RecordPacketNumber(PacketNumber pn) {
  auto next = received_.upper_bound(pn);
  if (next != received_.begin()) {
    auto prev = std::prev(next);
    if (pn <= prev->second) return false;  // duplicate
    if (prev->second + 1 == pn) {
      prev->second = pn;
      if (next != received_.end() && next->first == pn + 1) {
        prev->second = next->second;
        received_.erase(next);
      }
      return true;
    }
  }
  if (next != received_.end() && next->first == pn + 1) {
    const PacketNumber last = next->second;
    received_.erase(next);
    received_.emplace(pn, last);
    return true;
  }
  received_.emplace(pn, pn);
  return true;
}

AckFrame Receiver::BuildAck() {
  AckFrame ack;
  ack.flow_id = config_.flow;
  ack.largest_acked = received_.rbegin()->second;
  for (auto it = received_.rbegin();
       it != received_.rend() && ack.acked_ranges.size() < config_.max_ack_ranges;
       ++it) {
    ack.acked_ranges.push_back(PacketRange{it->first, it->second});
  }
  ack.recv_timestamps = std::move(pending_);
  pending_.clear();
  ack_deadline_.reset();
  return ack;
}

std::optional<AckFrame> Receiver::OnPacket(const Packet& packet,
                                           Timestamp now) {
  const bool fresh_pn = RecordPacketNumber(packet.packet_number);
  if (!fresh_pn) {
    ++duplicate_packets_;
    return BuildAck();
  }
  pending_.push_back(
      ReceiveTimestamp{packet.packet_number, config_.clock.Read(now)});

  if (packet.chunk >= chunk_seen_.size()) {
    chunk_seen_.resize(packet.chunk + 1, false);
  }
  const bool new_chunk = !chunk_seen_[packet.chunk];
  if (new_chunk) {
    chunk_seen_[packet.chunk] = true;
    unique_bytes_ += packet.size_bytes;
    ++unique_chunks_;
    last_new_delivery_ = now;
  } else {
    ++duplicate_chunks_;
  }
  if (trace_) {
    trace_->deliveries.push_back(metrics::DeliveryRecord{
        now, packet.size_bytes, new_chunk, !packet.carries_new_data,
        now - packet.chunk_first_sent_at});
  }

  if (pending_.size() >= config_.ack_ratio) return BuildAck();
  if (!ack_deadline_) ack_deadline_ = now + config_.max_ack_delay;
  return std::nullopt;
}

std::optional<AckFrame> Receiver::OnAckTimer(Timestamp now) {
  if (pending_.empty() || !ack_deadline_ || now < *ack_deadline_) {
    return std::nullopt;
  }
  return BuildAck();
}

}  // namespace dcc::transport
