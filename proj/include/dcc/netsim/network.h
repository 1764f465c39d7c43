#ifndef DCC_NETSIM_NETWORK_H_
#define DCC_NETSIM_NETWORK_H_

#include <functional>
#include <optional>
#include <vector>

#include "dcc/common/units.h"
#include "dcc/netsim/bottleneck_queue.h"
#include "dcc/netsim/link_model.h"
#include "dcc/netsim/simulator.h"
#include "dcc/transport/packet.h"

namespace dcc::netsim {

// Per-flow byte and packet tallies kept by the network itself.
struct FlowCounters {
  std::uint64_t injected_packets = 0;
  ByteCount injected_bytes = 0;
  std::uint64_t delivered_packets = 0;
  ByteCount delivered_bytes = 0;
  std::uint64_t dropped_packets = 0;
  ByteCount dropped_bytes = 0;
  // Accepted into the buffer, in service, or propagating to the receiver.
  ByteCount in_network_bytes = 0;
};

// Sender -> bottleneck buffer -> serializer -> forward delay -> receiver,
// with a pure-delay reverse path for ACKs. Any number of flows may share
// the bottleneck.
class Network {
 public:
  using PacketSink = std::function<void(const transport::Packet&)>;
  using AckSink = std::function<void(const transport::AckFrame&)>;
  using DropObserver =
      std::function<void(const transport::Packet&, Timestamp)>;
  // Called when a packet starts serialization; `queue_delay_us` is the exact
  // time it waited in the buffer (fractional microseconds).
  using ServiceObserver =
      std::function<void(const transport::Packet&, double queue_delay_us)>;

  Network(Simulator& sim, const LinkModel& link);
  Network(const Network&) = delete;
  Network& operator=(const Network&) = delete;

  void AttachFlow(FlowId flow, PacketSink to_receiver, AckSink to_sender);

  // Hands a data packet to the bottleneck at the current time.
  void SendData(const transport::Packet& packet);
  // Hands an ACK to the reverse path at the current time.
  void SendAck(const transport::AckFrame& ack);

  // Queueing delay a packet arriving now would see: backlog drain time plus
  // the residual serialization of the packet in service. Oracle only;
  // controllers never see this.
  double GroundTruthQueueDelayMicros(Timestamp at) const;
  Duration GroundTruthQueueDelay(Timestamp at) const;

  const LinkModel& link() const { return link_; }
  const BottleneckQueue& queue() const { return queue_; }
  ByteCount queue_bytes() const { return queue_.occupancy_bytes(); }
  ByteCount max_queue_bytes() const { return max_queue_bytes_; }
  const FlowCounters& counters(FlowId flow) const;
  std::size_t flow_count() const { return flows_.size(); }

  // Bytes of `flow` currently in the buffer, the serializer, or on the
  // forward propagation delay, each counted from its own container.
  ByteCount BufferedBytes(FlowId flow) const;
  ByteCount InServiceBytes(FlowId flow) const;
  ByteCount PropagatingBytes(FlowId flow) const;

  void set_drop_observer(DropObserver obs) { drop_observer_ = std::move(obs); }
  void set_service_observer(ServiceObserver obs) {
    service_observer_ = std::move(obs);
  }
  // Records (time, occupancy) after every buffer change when enabled.
  void EnableQueueTrace() { trace_queue_ = true; }
  const std::vector<std::pair<Timestamp, ByteCount>>& queue_trace() const {
    return queue_trace_;
  }

 private:
  // Exact link time: us + frac / capacity_bps microseconds.
  struct LinkTime {
    std::int64_t us = 0;
    std::uint64_t frac = 0;
  };

  struct FlowPorts {
    PacketSink to_receiver;
    AckSink to_sender;
    FlowCounters counters;
    ByteCount propagating_bytes = 0;
  };

  void OnArrivalAtQueue(const transport::Packet& packet);
  void StartService();
  void OnDequeueComplete();
  void RecordQueue();
  FlowPorts& Ports(FlowId flow);
  LinkTime Later(LinkTime t, Timestamp at) const;
  LinkTime AddSerialization(LinkTime t, ByteCount bytes) const;
  double Minus(LinkTime t, Timestamp at) const;

  Simulator& sim_;
  LinkModel link_;
  BottleneckQueue queue_;
  std::optional<transport::Packet> in_service_;
  LinkTime busy_until_;
  std::vector<FlowPorts> flows_;
  ByteCount max_queue_bytes_ = 0;
  DropObserver drop_observer_;
  ServiceObserver service_observer_;
  bool trace_queue_ = false;
  std::vector<std::pair<Timestamp, ByteCount>> queue_trace_;
};

}  // namespace dcc::netsim

#endif  // DCC_NETSIM_NETWORK_H_
