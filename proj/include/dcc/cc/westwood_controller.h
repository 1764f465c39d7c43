#ifndef DCC_CC_WESTWOOD_CONTROLLER_H_
#define DCC_CC_WESTWOOD_CONTROLLER_H_

#include <optional>
#include <string>

#include "dcc/cc/bandwidth_estimator.h"
#include "dcc/cc/congestion_controller.h"
#include "dcc/cc/owqd_estimator.h"

namespace dcc::cc {

struct DelayControlConfig {
  // When false the controller is plain Westwood+; the estimator still runs.
  bool enabled = true;
  Duration owqd_threshold = kInfiniteDuration;
};

struct WestwoodConfig {
  ControllerConfig base;
  FilterGains gains;
  Duration min_bwe_interval = Millis(50);
  DelayControlConfig delay;
};

// Westwood+ with an optional one-way queueing delay trigger (QUIC-DC).
//
// Every congestion episode sets ssthresh to BWE * RTT_min (floored at two
// packets). Loss and delay episodes then set cwnd = min(cwnd, ssthresh); a
// timeout drops cwnd to one packet. With the delay trigger disabled, or an
// infinite threshold, the controller is Westwood+ and takes the same code
// paths.
class WestwoodController : public CongestionController {
 public:
  explicit WestwoodController(const WestwoodConfig& config);

  std::string_view name() const override { return name_; }

  void OnAck(const AckEvent& ack) override;
  void OnLossDetected(const LossEvent& loss) override;
  void OnRto(Timestamp now) override;

  // Applies the Westwood+ reaction for `kind` at `now`. Exposed so the
  // reaction can be exercised from a known state.
  void OnCongestionEvent(CongestionEventKind kind, Timestamp now);

  double bwe_bps() const { return bwe_.bwe_bps(); }
  std::optional<Duration> rtt_min() const { return rtt_min_; }
  const OwqdEstimator& owqd() const { return owqd_; }
  const BandwidthEstimator& bandwidth_estimator() const { return bwe_; }
  bool delay_control_enabled() const { return delay_.enabled; }

  // BWE * RTT_min in bytes, floored at two packets.
  ByteCount PipeTarget() const;

  // Test hooks for driving the reaction from a chosen state.
  void SetStateForTesting(ByteCount cwnd, ByteCount ssthresh, double bwe_bps,
                          Duration rtt_min);

 private:
  DelayControlConfig delay_;
  std::string name_;
  BandwidthEstimator bwe_;
  OwqdEstimator owqd_;
  std::optional<Duration> rtt_min_;
};

}  // namespace dcc::cc

#endif  // DCC_CC_WESTWOOD_CONTROLLER_H_
