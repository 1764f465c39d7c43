#ifndef DCC_TRANSPORT_FLOW_H_
#define DCC_TRANSPORT_FLOW_H_

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "dcc/cc/congestion_controller.h"
#include "dcc/cc/factory.h"
#include "dcc/metrics/flow_trace.h"
#include "dcc/netsim/network.h"
#include "dcc/netsim/simulator.h"
#include "dcc/transport/receiver.h"
#include "dcc/transport/sender.h"

namespace dcc::transport {

struct FlowConfig {
  FlowId id = 0;
  std::string cca = "dc";
  cc::ControllerOptions controller;
  SenderConfig sender;
  ReceiverConfig receiver;
  Timestamp start_at{0};
  // Unbounded transfers stop taking new data at this time.
  std::optional<Timestamp> stop_new_data_at;
  bool record_series = true;
};

// One sender/receiver pair attached to the shared network, driven by the
// simulator's events.
class Flow {
 public:
  Flow(netsim::Simulator& sim, netsim::Network& network, FlowConfig config);
  // Uses a caller-built controller instead of the factory.
  Flow(netsim::Simulator& sim, netsim::Network& network, FlowConfig config,
       std::unique_ptr<cc::CongestionController> controller);
  Flow(const Flow&) = delete;
  Flow& operator=(const Flow&) = delete;

  // Schedules the flow-start event.
  void Start();

  bool complete() const { return sender_->complete(); }
  void set_on_complete(std::function<void()> fn) {
    on_complete_ = std::move(fn);
  }

  FlowId id() const { return config_.id; }
  const FlowConfig& config() const { return config_; }
  metrics::FlowTrace& trace() { return trace_; }
  const metrics::FlowTrace& trace() const { return trace_; }
  const Sender& sender() const { return *sender_; }
  const Receiver& receiver() const { return *receiver_; }
  const cc::CongestionController& controller() const { return *controller_; }
  // OWQD estimate when the controller runs one, else zero.
  Duration CurrentOwqd() const;

 private:
  void OnStart();
  void TrySend();
  void OnAckFrame(const AckFrame& ack);
  void OnDataPacket(const Packet& packet);
  void SyncRtoTimer();
  void SyncAckTimer();
  void OnRtoTimer(std::uint64_t generation);

  netsim::Simulator& sim_;
  netsim::Network& network_;
  FlowConfig config_;
  metrics::FlowTrace trace_;
  std::unique_ptr<cc::CongestionController> controller_;
  std::unique_ptr<Sender> sender_;
  std::unique_ptr<Receiver> receiver_;
  std::function<void()> on_complete_;
  bool completed_notified_ = false;

  std::optional<Timestamp> pacer_tick_at_;
  std::optional<Timestamp> rto_scheduled_for_;
  std::uint64_t rto_generation_ = 0;
  std::optional<Timestamp> ack_timer_at_;
};

}  // namespace dcc::transport

#endif  // DCC_TRANSPORT_FLOW_H_
