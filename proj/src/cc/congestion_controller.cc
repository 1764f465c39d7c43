#include "dcc/cc/congestion_controller.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dcc::cc {

std::string_view CongestionEventName(CongestionEventKind kind) {
  switch (kind) {
    case CongestionEventKind::kTimeout:
      return "timeout";
    case CongestionEventKind::kLossDetected:
      return "loss_detected";
    case CongestionEventKind::kDelayThreshold:
      return "delay_threshold";
  }
  return "unknown";
}

CongestionController::CongestionController(const ControllerConfig& config)
    : config_(config),
      max_window_(static_cast<ByteCount>(config.max_window_packets) *
                  config.mss),
      cwnd_(static_cast<ByteCount>(config.initial_window_packets) *
            config.mss),
      ssthresh_(std::numeric_limits<ByteCount>::max()) {
  if (config.mss == 0) throw std::invalid_argument("mss must be positive");
  if (config.max_window_packets < 2) {
    throw std::invalid_argument("max window must be at least two packets");
  }
  cwnd_ = ClampWindow(cwnd_);
}

ByteCount CongestionController::AuthorizedSendWindow() const {
  return std::max(cwnd_, MinWindow());
}

ByteCount CongestionController::ClampWindow(ByteCount w) const {
  return std::min(w, max_window_);
}

void CongestionController::RecordReaction(Timestamp now,
                                          CongestionEventKind kind) {
  recovery_start_ = now;
  last_reaction_ = now;
  ++reactions_;
  ca_carry_ = 0.0;
  if (reaction_observer_) reaction_observer_(now, kind, cwnd_);
}

void CongestionController::RenoGrowth(ByteCount acked_bytes) {
  if (acked_bytes == 0) return;
  if (cwnd_ < ssthresh_) {
    cwnd_ = ClampWindow(cwnd_ + acked_bytes);
    return;
  }
  ca_carry_ += static_cast<double>(config_.mss) *
               static_cast<double>(acked_bytes) / static_cast<double>(cwnd_);
  const auto whole = static_cast<ByteCount>(std::floor(ca_carry_));
  ca_carry_ -= static_cast<double>(whole);
  cwnd_ = ClampWindow(cwnd_ + whole);
}

}  // namespace dcc::cc
