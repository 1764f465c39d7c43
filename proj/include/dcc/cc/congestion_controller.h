#ifndef DCC_CC_CONGESTION_CONTROLLER_H_
#define DCC_CC_CONGESTION_CONTROLLER_H_

#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "dcc/common/units.h"

namespace dcc::cc {

enum class CongestionEventKind { kTimeout, kLossDetected, kDelayThreshold };

std::string_view CongestionEventName(CongestionEventKind kind);

// Sender departure time and receiver arrival time of one packet. The
// receiver clock may carry an arbitrary offset.
struct TimestampPair {
  PacketNumber packet_number = 0;
  Timestamp sent_at{0};
  Timestamp received_at{0};
};

struct AckEvent {
  Timestamp now{0};
  ByteCount newly_acked_bytes = 0;
  std::optional<Duration> rtt_sample;
  // Zero until the transport has its first RTT sample.
  Duration smoothed_rtt{0};
  // Send time of the largest newly acknowledged packet.
  Timestamp largest_acked_sent_at{0};
  ByteCount bytes_in_flight = 0;
  std::span<const TimestampPair> timestamps;
};

struct LossEvent {
  Timestamp now{0};
  ByteCount lost_bytes = 0;
  // Send time of the most recently sent packet among those declared lost.
  Timestamp largest_lost_sent_at{0};
  ByteCount bytes_in_flight = 0;
};

struct ControllerConfig {
  ByteCount mss = 1252;
  std::uint32_t initial_window_packets = 10;
  std::uint32_t max_window_packets = 100'000;
};

// Uniform callback surface shared by every controller. Controllers are
// deterministic functions of the callback sequence they receive.
//
// Recovery follows the packet-number idiom: a reaction at time T opens a
// recovery period, losses of packets sent at or before T do not cause a second
// reaction, and ACKs of such packets do not grow the window.
class CongestionController {
 public:
  using ReactionObserver =
      std::function<void(Timestamp, CongestionEventKind, ByteCount cwnd)>;

  explicit CongestionController(const ControllerConfig& config);
  virtual ~CongestionController() = default;

  virtual std::string_view name() const = 0;

  virtual void OnPacketSent(Timestamp /*now*/, ByteCount /*bytes*/) {}
  virtual void OnAck(const AckEvent& ack) = 0;
  virtual void OnLossDetected(const LossEvent& loss) = 0;
  virtual void OnRto(Timestamp now) = 0;

  // Never below two packets, even right after a timeout collapses cwnd to one.
  ByteCount AuthorizedSendWindow() const;

  ByteCount cwnd() const { return cwnd_; }
  ByteCount ssthresh() const { return ssthresh_; }
  ByteCount mss() const { return config_.mss; }
  ByteCount max_window() const { return max_window_; }
  bool InSlowStart() const { return cwnd_ < ssthresh_; }
  std::optional<Timestamp> last_reaction() const { return last_reaction_; }
  std::uint64_t reactions() const { return reactions_; }

  void set_reaction_observer(ReactionObserver obs) {
    reaction_observer_ = std::move(obs);
  }

 protected:
  bool InRecovery(Timestamp sent_at) const {
    return recovery_start_ && sent_at <= *recovery_start_;
  }
  // Marks a reaction at `now`: opens recovery and notifies the observer.
  // Call after cwnd_/ssthresh_ have been updated.
  void RecordReaction(Timestamp now, CongestionEventKind kind);
  // Reno growth: slow start below ssthresh (cwnd += acked), else
  // congestion avoidance (cwnd += mss * acked / cwnd). Capped at max window.
  void RenoGrowth(ByteCount acked_bytes);
  ByteCount MinWindow() const { return 2 * config_.mss; }
  ByteCount ClampWindow(ByteCount w) const;

  ControllerConfig config_;
  ByteCount max_window_;
  ByteCount cwnd_;
  ByteCount ssthresh_;
  // Fractional bytes of congestion-avoidance growth not yet applied.
  double ca_carry_ = 0.0;

 private:
  std::optional<Timestamp> recovery_start_;
  std::optional<Timestamp> last_reaction_;
  std::uint64_t reactions_ = 0;
  ReactionObserver reaction_observer_;
};

}  // namespace dcc::cc

#endif  // DCC_CC_CONGESTION_CONTROLLER_H_
