#include "dcc/transport/sender.h"

#include <algorithm>
#include <string>

namespace dcc::transport {

Sender::Sender(const SenderConfig& config, cc::CongestionController& controller,
               metrics::FlowTrace* trace)
    : config_(config),
      controller_(controller),
      trace_(trace),
      pacer_(config.pacing_interval, config.pacing),
      rtt_(config.initial_rto, config.min_rto) {
  if (config.packet_bytes == 0) {
    throw std::invalid_argument("packet size must be positive");
  }
  if (config.transfer_bytes) {
    if (*config.transfer_bytes == 0) {
      throw std::invalid_argument("transfer size must be positive");
    }
    chunk_count_ = (*config.transfer_bytes + config.packet_bytes - 1) /
                   config.packet_bytes;
    chunk_acked_.assign(chunk_count_, false);
    chunk_first_sent_.assign(chunk_count_, Timestamp(0));
  }
}

ByteCount Sender::ChunkBytes(std::uint64_t chunk) const {
  if (!config_.transfer_bytes || chunk + 1 < chunk_count_) {
    return config_.packet_bytes;
  }
  return *config_.transfer_bytes - chunk * config_.packet_bytes;
}

bool Sender::ChunkAcked(std::uint64_t chunk) const {
  return chunk < chunk_acked_.size() && chunk_acked_[chunk];
}

void Sender::MarkChunkAcked(std::uint64_t chunk) {
  if (chunk >= chunk_acked_.size()) chunk_acked_.resize(chunk + 1, false);
  if (!chunk_acked_[chunk]) {
    chunk_acked_[chunk] = true;
    ++acked_chunk_total_;
  }
}

bool Sender::HasNewData() const {
  if (new_data_stopped_) return false;
  return chunk_count_ == 0 || next_chunk_ < chunk_count_;
}

void Sender::SkipAckedRetransmissions() {
  while (!retransmit_queue_.empty() &&
         ChunkAcked(*retransmit_queue_.begin())) {
    retransmit_queue_.erase(retransmit_queue_.begin());
  }
}

bool Sender::HasSendableData() const {
  for (std::uint64_t chunk : retransmit_queue_) {
    if (!ChunkAcked(chunk)) return true;
  }
  return HasNewData();
}

bool Sender::BlockedByPacer(Timestamp now) const {
  return HasSendableData() &&
         bytes_in_flight_ < controller_.AuthorizedSendWindow() &&
         !pacer_.CanRelease(now);
}

bool Sender::complete() const {
  return chunk_count_ > 0 && acked_chunk_total_ == chunk_count_;
}

Packet Sender::BuildPacket(Timestamp now) {
  SkipAckedRetransmissions();
  Packet p;
  p.flow_id = config_.flow;
  p.packet_number = next_pn_++;
  p.sent_at = now;
  if (!retransmit_queue_.empty()) {
    p.chunk = *retransmit_queue_.begin();
    retransmit_queue_.erase(retransmit_queue_.begin());
    p.carries_new_data = false;
    p.chunk_first_sent_at = chunk_first_sent_[p.chunk];
  } else {
    p.chunk = next_chunk_++;
    if (p.chunk >= chunk_first_sent_.size()) {
      chunk_first_sent_.resize(p.chunk + 1, Timestamp(0));
    }
    chunk_first_sent_[p.chunk] = now;
    p.carries_new_data = true;
    p.chunk_first_sent_at = now;
  }
  p.size_bytes = ChunkBytes(p.chunk);

  outstanding_.emplace(p.packet_number,
                       SentPacket{p.chunk, p.size_bytes, p.sent_at});
  sent_at_by_pn_.push_back(now);
  bytes_in_flight_ += p.size_bytes;
  if (!rto_deadline_) rto_deadline_ = now + rtt_.rto();
  controller_.OnPacketSent(now, p.size_bytes);
  if (trace_) {
    trace_->sends.push_back(metrics::SendRecord{
        now, p.packet_number, p.size_bytes, !p.carries_new_data});
  }
  return p;
}

std::vector<Packet> Sender::OnSendOpportunity(Timestamp now) {
  std::vector<Packet> out;
  while (HasSendableData() &&
         bytes_in_flight_ < controller_.AuthorizedSendWindow() &&
         pacer_.CanRelease(now)) {
    out.push_back(BuildPacket(now));
    pacer_.OnRelease(now);
    if (pacer_.enabled()) break;
  }
  return out;
}

void Sender::DeclareLost(PacketNumber pn, const SentPacket& sp) {
  bytes_in_flight_ -= sp.bytes;
  if (!ChunkAcked(sp.chunk)) retransmit_queue_.insert(sp.chunk);
  lost_.emplace(pn, sp);
  if (trace_) ++trace_->declared_lost;
}

AckOutcome Sender::OnAck(const AckFrame& ack, Timestamp now) {
  if (ack.largest_acked >= next_pn_) {
    if (trace_) trace_->aborted = true;
    throw ProtocolError("ACK of never-sent packet " +
                        std::to_string(ack.largest_acked) + " (next is " +
                        std::to_string(next_pn_) + ")");
  }
  for (const auto& r : ack.acked_ranges) {
    if (r.first > r.last || r.last > ack.largest_acked) {
      if (trace_) trace_->aborted = true;
      throw ProtocolError("malformed ACK range");
    }
  }

  AckOutcome out;
  std::optional<PacketNumber> largest_new;
  Timestamp largest_new_sent_at{0};
  auto take = [&](std::map<PacketNumber, SentPacket>& from, bool in_flight,
                  const PacketRange& r) {
    for (auto it = from.lower_bound(r.first);
         it != from.end() && it->first <= r.last;) {
      const SentPacket& sp = it->second;
      if (in_flight) bytes_in_flight_ -= sp.bytes;
      out.newly_acked_bytes += sp.bytes;
      MarkChunkAcked(sp.chunk);
      if (!largest_new || it->first > *largest_new) {
        largest_new = it->first;
        largest_new_sent_at = sp.sent_at;
      }
      it = from.erase(it);
    }
  };
  for (const auto& r : ack.acked_ranges) {
    take(outstanding_, true, r);
    take(lost_, false, r);
  }
  if (!any_acked_ || ack.largest_acked > largest_acked_) {
    largest_acked_ = ack.largest_acked;
    any_acked_ = true;
  }

  if (largest_new) {
    out.rtt_sample = now - largest_new_sent_at;
    rtt_.OnSample(*out.rtt_sample);
    if (trace_) trace_->rtts.push_back({now, *out.rtt_sample});
  }

  // Packet-threshold loss detection.
  ByteCount lost_bytes = 0;
  Timestamp largest_lost_sent_at{0};
  while (!outstanding_.empty() &&
         outstanding_.begin()->first + config_.reorder_threshold <=
             largest_acked_) {
    auto it = outstanding_.begin();
    out.lost_packets.push_back(it->first);
    lost_bytes += it->second.bytes;
    largest_lost_sent_at = std::max(largest_lost_sent_at, it->second.sent_at);
    DeclareLost(it->first, it->second);
    outstanding_.erase(it);
  }

  out.timestamp_pairs.reserve(ack.recv_timestamps.size());
  for (const auto& ts : ack.recv_timestamps) {
    if (ts.packet_number >= sent_at_by_pn_.size()) {
      throw ProtocolError("timestamp for never-sent packet");
    }
    out.timestamp_pairs.push_back(cc::TimestampPair{
        ts.packet_number, sent_at_by_pn_[ts.packet_number], ts.received_at});
  }

  if (out.newly_acked_bytes > 0) {
    rtt_.ResetBackoff();
    if (outstanding_.empty()) {
      rto_deadline_.reset();
    } else {
      rto_deadline_ = now + rtt_.rto();
    }
  }

  cc::AckEvent event;
  event.now = now;
  event.newly_acked_bytes = out.newly_acked_bytes;
  event.rtt_sample = out.rtt_sample;
  event.smoothed_rtt = rtt_.smoothed_rtt();
  event.largest_acked_sent_at = largest_new_sent_at;
  event.bytes_in_flight = bytes_in_flight_;
  event.timestamps = out.timestamp_pairs;
  controller_.OnAck(event);

  if (!out.lost_packets.empty()) {
    controller_.OnLossDetected(cc::LossEvent{now, lost_bytes,
                                             largest_lost_sent_at,
                                             bytes_in_flight_});
  }
  return out;
}

RtoOutcome Sender::OnRto(Timestamp now) {
  RtoOutcome out;
  if (outstanding_.empty()) {
    rto_deadline_.reset();
    out.next_rto = rtt_.rto();
    return out;
  }
  out.fired = true;
  rtt_.Backoff();
  while (!outstanding_.empty()) {
    auto it = outstanding_.begin();
    DeclareLost(it->first, it->second);
    outstanding_.erase(it);
  }
  SkipAckedRetransmissions();
  if (!retransmit_queue_.empty()) out.retransmit_chunk = *retransmit_queue_.begin();
  out.next_rto = rtt_.rto();
  rto_deadline_.reset();
  if (trace_) ++trace_->rto_count;
  controller_.OnRto(now);
  return out;
}

}  // namespace dcc::transport
