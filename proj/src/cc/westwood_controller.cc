#include "dcc/cc/westwood_controller.h"

#include <algorithm>
#include <cmath>

namespace dcc::cc {

WestwoodController::WestwoodController(const WestwoodConfig& config)
    : CongestionController(config.base),
      delay_(config.delay),
      name_(config.delay.enabled &&
                    config.delay.owqd_threshold != kInfiniteDuration
                ? "dc"
                : "westwood+"),
      bwe_(config.gains, config.min_bwe_interval),
      owqd_(config.delay.owqd_threshold) {}

ByteCount WestwoodController::PipeTarget() const {
  double target = 0.0;
  if (rtt_min_) target = BytesForRate(bwe_.bwe_bps(), *rtt_min_);
  const auto bytes = static_cast<ByteCount>(std::max(0.0, std::floor(target)));
  return std::max(bytes, MinWindow());
}

void WestwoodController::OnCongestionEvent(CongestionEventKind kind,
                                           Timestamp now) {
  ssthresh_ = PipeTarget();
  if (kind == CongestionEventKind::kTimeout) {
    cwnd_ = config_.mss;
  } else {
    cwnd_ = std::min(cwnd_, ssthresh_);
  }
  RecordReaction(now, kind);
}

void WestwoodController::OnAck(const AckEvent& ack) {
  if (ack.rtt_sample && (!rtt_min_ || *ack.rtt_sample < *rtt_min_)) {
    rtt_min_ = *ack.rtt_sample;
  }
  bwe_.OnAck(ack.newly_acked_bytes, ack.now, ack.smoothed_rtt);
  for (const TimestampPair& p : ack.timestamps) {
    owqd_.Update(p.sent_at, p.received_at);
  }
  if (delay_.enabled &&
      CheckDelayEvent(owqd_, ack.now, last_reaction(), ack.smoothed_rtt)) {
    OnCongestionEvent(CongestionEventKind::kDelayThreshold, ack.now);
    return;
  }
  if (InRecovery(ack.largest_acked_sent_at)) return;
  RenoGrowth(ack.newly_acked_bytes);
}

void WestwoodController::OnLossDetected(const LossEvent& loss) {
  if (InRecovery(loss.largest_lost_sent_at)) return;
  OnCongestionEvent(CongestionEventKind::kLossDetected, loss.now);
}

void WestwoodController::OnRto(Timestamp now) {
  OnCongestionEvent(CongestionEventKind::kTimeout, now);
}

void WestwoodController::SetStateForTesting(ByteCount cwnd, ByteCount ssthresh,
                                            double bwe_bps, Duration rtt_min) {
  cwnd_ = cwnd;
  ssthresh_ = ssthresh;
  bwe_ = BandwidthEstimator(bwe_.gains());
  bwe_.AddSample(bwe_bps);
  rtt_min_ = rtt_min;
}

}  // namespace dcc::cc
