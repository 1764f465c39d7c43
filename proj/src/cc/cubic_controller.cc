#include "dcc/cc/cubic_controller.h"

#include <algorithm>
#include <cmath>

namespace dcc::cc {

double CubicK(double w_max_segments, const CubicParams& params) {
  return std::cbrt(w_max_segments * (1.0 - params.beta) / params.c);
}

double CubicW(double t_seconds, const CubicState& state,
              const CubicParams& params) {
  const double d = t_seconds - state.k_seconds;
  return params.c * d * d * d + state.w_max;
}

ByteCount CubicWindow(double t_since_epoch_seconds, const CubicState& state,
                      const CubicParams& params, ByteCount mss) {
  double w = CubicW(t_since_epoch_seconds, state, params);
  if (params.tcp_friendly) w = std::max(w, state.tcp_friendly_w);
  w = std::max(w, 0.0);
  return static_cast<ByteCount>(w * static_cast<double>(mss));
}

CubicController::CubicController(const ControllerConfig& config,
                                 CubicParams params)
    : CongestionController(config), params_(params) {}

void CubicController::StartEpoch(Timestamp now) {
  state_.epoch_start = now;
  const double cwnd_seg = Segments(cwnd_);
  // Without a previous reduction (or after growing past it) the curve
  // starts at its plateau.
  if (state_.w_max < cwnd_seg) state_.w_max = cwnd_seg;
  // After a plain beta reduction W(0) equals cwnd. With fast convergence
  // W(0) sits below cwnd and the window holds until the curve catches up.
  state_.k_seconds = CubicK(state_.w_max, params_);
  state_.tcp_friendly_w = cwnd_seg;
}

void CubicController::OnAck(const AckEvent& ack) {
  if (InRecovery(ack.largest_acked_sent_at)) return;
  if (ack.newly_acked_bytes == 0) return;
  if (InSlowStart()) {
    RenoGrowth(ack.newly_acked_bytes);
    return;
  }
  if (!state_.epoch_start) StartEpoch(ack.now);

  const double cwnd_seg = Segments(cwnd_);
  const double acked_seg = Segments(ack.newly_acked_bytes);
  const double alpha = 3.0 * (1.0 - params_.beta) / (1.0 + params_.beta);
  state_.tcp_friendly_w += alpha * acked_seg / cwnd_seg;

  const double t = ToSeconds(ack.now - *state_.epoch_start + ack.smoothed_rtt);
  const double w_cubic = CubicW(t, state_, params_);

  if (params_.tcp_friendly && w_cubic < state_.tcp_friendly_w) {
    const auto friendly = static_cast<ByteCount>(
        state_.tcp_friendly_w * static_cast<double>(config_.mss));
    cwnd_ = ClampWindow(std::max(cwnd_, friendly));
    return;
  }
  const double target = std::clamp(w_cubic, cwnd_seg, 1.5 * cwnd_seg);
  ca_carry_ += (target - cwnd_seg) / cwnd_seg *
               static_cast<double>(ack.newly_acked_bytes);
  const auto whole = static_cast<ByteCount>(std::floor(ca_carry_));
  ca_carry_ -= static_cast<double>(whole);
  cwnd_ = ClampWindow(cwnd_ + whole);
}

ByteCount CubicController::ReducedWindow() const {
  // Truncates like mvfst: 125000 B * 0.7 gives 87499 B.
  const double reduced = static_cast<double>(cwnd_) * params_.beta;
  return std::max(static_cast<ByteCount>(reduced), MinWindow());
}

void CubicController::SetWmax() {
  const double cwnd_seg = Segments(cwnd_);
  if (params_.fast_convergence && cwnd_seg < state_.w_max) {
    state_.w_max = cwnd_seg * (1.0 + params_.beta) / 2.0;
  } else {
    state_.w_max = cwnd_seg;
  }
  state_.epoch_start.reset();
}

void CubicController::OnLossDetected(const LossEvent& loss) {
  if (InRecovery(loss.largest_lost_sent_at)) return;
  SetWmax();
  ssthresh_ = ReducedWindow();
  cwnd_ = ssthresh_;
  RecordReaction(loss.now, CongestionEventKind::kLossDetected);
}

void CubicController::OnRto(Timestamp now) {
  SetWmax();
  ssthresh_ = ReducedWindow();
  cwnd_ = config_.mss;
  RecordReaction(now, CongestionEventKind::kTimeout);
}

}  // namespace dcc::cc
