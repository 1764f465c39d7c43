#include "dcc/cc/newreno_controller.h"

#include <algorithm>

namespace dcc::cc {

void NewRenoController::OnAck(const AckEvent& ack) {
  if (InRecovery(ack.largest_acked_sent_at)) return;
  RenoGrowth(ack.newly_acked_bytes);
}

void NewRenoController::OnLossDetected(const LossEvent& loss) {
  if (InRecovery(loss.largest_lost_sent_at)) return;
  ssthresh_ = std::max(cwnd_ / 2, MinWindow());
  cwnd_ = ssthresh_;
  RecordReaction(loss.now, CongestionEventKind::kLossDetected);
}

void NewRenoController::OnRto(Timestamp now) {
  ssthresh_ = std::max(cwnd_ / 2, MinWindow());
  cwnd_ = config_.mss;
  RecordReaction(now, CongestionEventKind::kTimeout);
}

}  // namespace dcc::cc
