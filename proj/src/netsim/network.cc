#include "dcc/netsim/network.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dcc::netsim {

Network::Network(Simulator& sim, const LinkModel& link)
    : sim_(sim), link_(link), queue_(link.buffer_bytes) {
  link_.Validate(1);
}

void Network::AttachFlow(FlowId flow, PacketSink to_receiver,
                         AckSink to_sender) {
  if (flows_.size() <= flow) flows_.resize(flow + 1);
  flows_[flow].to_receiver = std::move(to_receiver);
  flows_[flow].to_sender = std::move(to_sender);
}

Network::FlowPorts& Network::Ports(FlowId flow) {
  if (flow >= flows_.size()) {
    throw std::out_of_range("unknown flow " + std::to_string(flow));
  }
  return flows_[flow];
}

const FlowCounters& Network::counters(FlowId flow) const {
  if (flow >= flows_.size()) {
    throw std::out_of_range("unknown flow " + std::to_string(flow));
  }
  return flows_[flow].counters;
}

void Network::SendData(const transport::Packet& packet) {
  Ports(packet.flow_id);
  sim_.Schedule(sim_.now(), EventKind::kPacketArrivalAtQueue,
                [this, packet] { OnArrivalAtQueue(packet); });
}

void Network::SendAck(const transport::AckFrame& ack) {
  Ports(ack.flow_id);
  sim_.Schedule(sim_.now() + link_.prop_bwd, EventKind::kAckArrivalAtSender,
                [this, ack] {
                  auto& ports = flows_[ack.flow_id];
                  if (ports.to_sender) ports.to_sender(ack);
                });
}

void Network::OnArrivalAtQueue(const transport::Packet& packet) {
  FlowPorts& ports = flows_[packet.flow_id];
  ports.counters.injected_packets += 1;
  ports.counters.injected_bytes += packet.size_bytes;
  if (queue_.Enqueue(packet, sim_.now()) == Admission::kDropped) {
    ports.counters.dropped_packets += 1;
    ports.counters.dropped_bytes += packet.size_bytes;
    if (drop_observer_) drop_observer_(packet, sim_.now());
    return;
  }
  ports.counters.in_network_bytes += packet.size_bytes;
  RecordQueue();
  if (!in_service_) StartService();
  max_queue_bytes_ = std::max(max_queue_bytes_, queue_.occupancy_bytes());
}

Network::LinkTime Network::Later(LinkTime t, Timestamp at) const {
  if (t.us > at.count() || (t.us == at.count() && t.frac > 0)) return t;
  return LinkTime{at.count(), 0};
}

Network::LinkTime Network::AddSerialization(LinkTime t,
                                            ByteCount bytes) const {
  const std::uint64_t c = link_.capacity_bps;
  const std::uint64_t total = t.frac + 8'000'000ULL * bytes;
  t.us += static_cast<std::int64_t>(total / c);
  t.frac = total % c;
  return t;
}

double Network::Minus(LinkTime t, Timestamp at) const {
  return static_cast<double>(t.us - at.count()) +
         static_cast<double>(t.frac) /
             static_cast<double>(link_.capacity_bps);
}

void Network::StartService() {
  auto entry = queue_.Dequeue();
  if (!entry) return;
  const LinkTime start = Later(busy_until_, entry->arrived_at);
  if (service_observer_) {
    service_observer_(entry->packet, Minus(start, entry->arrived_at));
  }
  busy_until_ = AddSerialization(start, entry->packet.size_bytes);
  in_service_ = entry->packet;
  RecordQueue();
  const Timestamp done(busy_until_.us + (busy_until_.frac > 0 ? 1 : 0));
  sim_.Schedule(done, EventKind::kDequeueComplete,
                [this] { OnDequeueComplete(); });
}

void Network::OnDequeueComplete() {
  const transport::Packet packet = *in_service_;
  in_service_.reset();
  FlowPorts& ports = flows_[packet.flow_id];
  ports.propagating_bytes += packet.size_bytes;
  sim_.Schedule(sim_.now() + link_.prop_fwd,
                EventKind::kPacketArrivalAtReceiver, [this, packet] {
                  FlowPorts& p = flows_[packet.flow_id];
                  p.propagating_bytes -= packet.size_bytes;
                  p.counters.in_network_bytes -= packet.size_bytes;
                  p.counters.delivered_packets += 1;
                  p.counters.delivered_bytes += packet.size_bytes;
                  if (p.to_receiver) p.to_receiver(packet);
                });
  if (!queue_.empty()) StartService();
}

void Network::RecordQueue() {
  if (trace_queue_) {
    queue_trace_.emplace_back(sim_.now(), queue_.occupancy_bytes());
  }
}

double Network::GroundTruthQueueDelayMicros(Timestamp at) const {
  double residual = 0.0;
  if (in_service_) residual = std::max(0.0, Minus(busy_until_, at));
  return residual + link_.SerializationMicros(queue_.occupancy_bytes());
}

Duration Network::GroundTruthQueueDelay(Timestamp at) const {
  return Duration(
      static_cast<std::int64_t>(std::llround(GroundTruthQueueDelayMicros(at))));
}

ByteCount Network::BufferedBytes(FlowId flow) const {
  ByteCount total = 0;
  for (const auto& e : queue_.entries()) {
    if (e.packet.flow_id == flow) total += e.packet.size_bytes;
  }
  return total;
}

ByteCount Network::InServiceBytes(FlowId flow) const {
  return in_service_ && in_service_->flow_id == flow ? in_service_->size_bytes
                                                     : 0;
}

ByteCount Network::PropagatingBytes(FlowId flow) const {
  return flow < flows_.size() ? flows_[flow].propagating_bytes : 0;
}

}  // namespace dcc::netsim
