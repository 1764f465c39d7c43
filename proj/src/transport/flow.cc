#include "dcc/transport/flow.h"

#include "dcc/cc/westwood_controller.h"

namespace dcc::transport {

Flow::Flow(netsim::Simulator& sim, netsim::Network& network, FlowConfig config)
    : Flow(sim, network, config,
           cc::MakeController(config.cca, config.controller)) {}

Flow::Flow(netsim::Simulator& sim, netsim::Network& network, FlowConfig config,
           std::unique_ptr<cc::CongestionController> controller)
    : sim_(sim),
      network_(network),
      config_(std::move(config)),
      controller_(std::move(controller)) {
  config_.sender.flow = config_.id;
  config_.receiver.flow = config_.id;
  trace_.flow = config_.id;
  trace_.cca = config_.cca;
  sender_ = std::make_unique<Sender>(config_.sender, *controller_, &trace_);
  receiver_ = std::make_unique<Receiver>(config_.receiver, &trace_);
  controller_->set_reaction_observer(
      [this](Timestamp at, cc::CongestionEventKind kind, ByteCount cwnd) {
        trace_.reactions.push_back(
            {at, std::string(cc::CongestionEventName(kind)), cwnd});
      });
  network_.AttachFlow(
      config_.id, [this](const Packet& p) { OnDataPacket(p); },
      [this](const AckFrame& a) { OnAckFrame(a); });
}

Duration Flow::CurrentOwqd() const {
  if (const auto* w =
          dynamic_cast<const cc::WestwoodController*>(controller_.get())) {
    return w->owqd().owqd();
  }
  return Duration(0);
}

void Flow::Start() {
  sim_.Schedule(config_.start_at, netsim::EventKind::kFlowStart,
                [this] { OnStart(); });
}

void Flow::OnStart() {
  if (config_.stop_new_data_at) {
    sim_.Schedule(std::max(*config_.stop_new_data_at, sim_.now()),
                  netsim::EventKind::kFlowStart,
                  [this] { sender_->StopNewData(); });
  }
  TrySend();
}

void Flow::TrySend() {
  const Timestamp now = sim_.now();
  for (const Packet& p : sender_->OnSendOpportunity(now)) {
    network_.SendData(p);
  }
  if (sender_->BlockedByPacer(now)) {
    const Timestamp at = sender_->pacer().next_release();
    if (!pacer_tick_at_ || *pacer_tick_at_ != at) {
      pacer_tick_at_ = at;
      sim_.Schedule(at, netsim::EventKind::kPacerTick, [this, at] {
        if (pacer_tick_at_ == at) pacer_tick_at_.reset();
        TrySend();
      });
    }
  }
  SyncRtoTimer();
}

void Flow::OnAckFrame(const AckFrame& ack) {
  const Timestamp now = sim_.now();
  const AckOutcome outcome = sender_->OnAck(ack, now);
  if (config_.record_series) {
    trace_.series.push_back(metrics::SeriesRow{now, controller_->cwnd(),
                                               outcome.rtt_sample,
                                               CurrentOwqd(),
                                               network_.queue_bytes()});
  }
  if (sender_->complete()) {
    trace_.completed = true;
    if (!completed_notified_) {
      completed_notified_ = true;
      if (on_complete_) on_complete_();
    }
    SyncRtoTimer();
    return;
  }
  TrySend();
}

void Flow::OnDataPacket(const Packet& packet) {
  const Timestamp now = sim_.now();
  if (auto ack = receiver_->OnPacket(packet, now)) {
    network_.SendAck(*ack);
  }
  SyncAckTimer();
}

void Flow::SyncAckTimer() {
  const auto deadline = receiver_->ack_deadline();
  if (!deadline || (ack_timer_at_ && *ack_timer_at_ == *deadline)) return;
  ack_timer_at_ = *deadline;
  sim_.Schedule(*deadline, netsim::EventKind::kAckTimer, [this] {
    ack_timer_at_.reset();
    if (auto ack = receiver_->OnAckTimer(sim_.now())) network_.SendAck(*ack);
    SyncAckTimer();
  });
}

void Flow::SyncRtoTimer() {
  const auto deadline = sender_->rto_deadline();
  if (!deadline) return;
  // A pending timer that fires no later than the deadline re-arms itself.
  if (rto_scheduled_for_ && *rto_scheduled_for_ <= *deadline) return;
  const Timestamp at = std::max(*deadline, sim_.now());
  rto_scheduled_for_ = at;
  const std::uint64_t gen = ++rto_generation_;
  sim_.Schedule(at, netsim::EventKind::kRtoExpiry,
                [this, gen] { OnRtoTimer(gen); });
}

void Flow::OnRtoTimer(std::uint64_t generation) {
  if (generation != rto_generation_) return;
  rto_scheduled_for_.reset();
  const auto deadline = sender_->rto_deadline();
  if (!deadline) return;
  if (sim_.now() < *deadline) {
    SyncRtoTimer();
    return;
  }
  sender_->OnRto(sim_.now());
  TrySend();
}

}  // namespace dcc::transport
